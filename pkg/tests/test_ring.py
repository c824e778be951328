import pytest

from zpzpu.ring import (
    FpElem,
    NotAUnit,
    RElem,
    format_r_entry,
    is_prime,
    parse_r_entry,
    psi,
    r_inv,
)


def all_elems(p):
    return [RElem(a, b, p) for a in range(p) for b in range(p)]


def test_is_prime():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ring_axioms(p):
    elems = all_elems(p)
    zero, one = RElem.zero(p), RElem.one(p)
    for x in elems:
        assert x + zero == x
        assert x * one == x
        assert x + (-x) == zero
        for y in elems:
            assert x + y == y + x
            assert x * y == y * x
    for x in elems[: p * p]:
        for y in elems:
            for z in elems:
                assert (x + y) + z == x + (y + z)
                assert x * (y + z) == x * y + x * z


def test_u_squared_is_zero():
    for p in (2, 3, 5):
        u = RElem.u(p)
        assert u * u == RElem.zero(p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_units_and_inverses(p):
    for x in all_elems(p):
        if x.a != 0:
            assert x.is_unit()
            assert x * x.inverse() == RElem.one(p)
            assert r_inv(x) == x.inverse()
        else:
            assert not x.is_unit()
            with pytest.raises(NotAUnit):
                x.inverse()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_psi_bijective_and_additive(p):
    images = {psi(x) for x in all_elems(p)}
    assert len(images) == p * p
    for x in all_elems(p):
        for y in all_elems(p):
            sx, sy = psi(x), psi(y)
            assert psi(x + y) == (sx[0] + sy[0], sx[1] + sy[1])


def test_psi_values():
    # psi(a + ub) = (b, a + b)
    assert psi(RElem(1, 2, 3)) == (FpElem(2, 3), FpElem(0, 3))
    assert psi(RElem.u(3)) == (FpElem(1, 3), FpElem(1, 3))


def test_parse_format_roundtrip():
    for p in (2, 3, 5):
        for x in all_elems(p):
            assert parse_r_entry(format_r_entry(x), p) == x


def test_parse_rejects_out_of_range():
    with pytest.raises(ValueError):
        parse_r_entry("3u", 3)
    with pytest.raises(ValueError):
        parse_r_entry("5", 3)
    with pytest.raises(ValueError):
        parse_r_entry("1+3u", 3)
