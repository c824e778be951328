import pytest

from zpzpu.code import AdditiveCode
from zpzpu.cyclic import (
    CyclicGenerators,
    check_conditions,
    cyclic_from_generators,
    divisors_of_xn_minus_1,
    dual_cyclicity_check,
    factor_xn_minus_1,
    format_fp_poly,
    fp_poly,
    fp_poly_divmod,
    fp_poly_gcd,
    fp_poly_mul,
    gray_shift_analysis,
    is_cyclic,
    parse_fp_poly,
    presentation_of,
    shift,
    xn_minus_1,
)
from zpzpu.words import Shape, parse_word


def test_poly_arithmetic():
    p = 3
    a = fp_poly([1, 0, 2], p)  # 1 + 2x^2
    b = fp_poly([2, 1], p)  # 2 + x
    quot, rem = fp_poly_divmod(fp_poly_mul(a, b, p), b, p)
    assert quot == a and rem == ()
    assert fp_poly_gcd(a, (), p) == fp_poly([2, 0, 1], p)  # monic scaling of a


def test_parse_format_roundtrip():
    for text in ("0", "1", "x", "1 + 2 x + x^3", "2 x^2"):
        poly = parse_fp_poly(text, 3)
        assert parse_fp_poly(format_fp_poly(poly), 3) == poly


def test_factor_xn_minus_1():
    # x^3 - 1 = (x - 1)^3 over F_3 (totally ramified)
    assert factor_xn_minus_1(3, 3) == {fp_poly([-1, 1], 3): 3}
    # x^3 - 1 = (x + 1)(x^2 + x + 1) over F_2
    assert factor_xn_minus_1(3, 2) == {
        fp_poly([1, 1], 2): 1,
        fp_poly([1, 1, 1], 2): 1,
    }
    for n, p in ((4, 2), (6, 3), (5, 2)):
        prod = fp_poly([1], p)
        for q, e in factor_xn_minus_1(n, p).items():
            for _ in range(e):
                prod = fp_poly_mul(prod, q, p)
        assert prod == xn_minus_1(n, p)


def test_divisors():
    divs = divisors_of_xn_minus_1(3, 2)
    assert fp_poly([1], 2) in divs
    assert xn_minus_1(3, 2) in divs
    assert len(divs) == 4


def test_shift():
    shape = Shape(3, 2, 2)
    w = parse_word("1 2 | u 1", shape)
    assert shift(w) == parse_word("2 1 | 1 u", shape)


def test_cyclic_from_generators_is_cyclic():
    shape = Shape(3, 1, 2)
    gen = CyclicGenerators(
        shape=shape,
        f=parse_fp_poly("1", 3),
        h1=(),
        g=parse_fp_poly("1 + x", 3),
        pp=(),
        q=parse_fp_poly("1", 3),
    )
    code = cyclic_from_generators(gen)
    assert is_cyclic(code)
    assert dual_cyclicity_check(code)


def test_non_cyclic_detected():
    shape = Shape(3, 2, 1)
    code = AdditiveCode(shape, [parse_word("1 0 | 0", shape)])
    assert not is_cyclic(code)
    with pytest.raises(ValueError):
        presentation_of(code)


def test_presentation_roundtrip():
    shape = Shape(2, 2, 2)
    gen = CyclicGenerators(
        shape=shape,
        f=parse_fp_poly("1 + x", 2),
        h1=parse_fp_poly("1", 2),
        g=parse_fp_poly("1 + x", 2),
        pp=parse_fp_poly("1", 2),
        q=parse_fp_poly("1", 2),
    )
    code = cyclic_from_generators(gen)
    rebuilt = cyclic_from_generators(presentation_of(code))
    assert rebuilt.wordset() == code.wordset()


def test_gray_shift_block_rotation_always_holds():
    shape = Shape(3, 1, 2)
    gen = CyclicGenerators(
        shape=shape, f=parse_fp_poly("1", 3), h1=(), g=(), pp=(), q=parse_fp_poly("1", 3)
    )
    code = cyclic_from_generators(gen)
    report = gray_shift_analysis(code)
    assert report.block_rotation


def test_check_conditions_reports():
    shape = Shape(3, 1, 2)
    gen = CyclicGenerators(
        shape=shape,
        f=parse_fp_poly("1", 3),
        h1=(),
        g=parse_fp_poly("1 + x", 3),
        pp=(),
        q=parse_fp_poly("1", 3),
    )
    report = check_conditions(gen)
    names = [name for name, _ in report.results]
    assert "q | g" in names and "g | x^beta-1" in names
    assert any(v.startswith("unevaluable") for _, v in report.results)
