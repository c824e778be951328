import pytest
from hypothesis import given, strategies as st

from zpzpu.ring import RElem
from zpzpu.words import (
    MixedWord,
    Shape,
    format_word,
    hadamard,
    inner_product,
    iter_ambient,
    parse_word,
    scalar_mul_fp,
    scalar_mul_r,
    word_add,
    word_neg,
    word_sub,
    zero_word,
)

SHAPE = Shape(3, 2, 2)


def w(text, shape=SHAPE):
    return parse_word(text, shape)


def test_shape_counts():
    assert SHAPE.n == 6
    assert SHAPE.ncoords == 4
    assert SHAPE.ambient_size == 3 ** 6
    assert sum(1 for _ in iter_ambient(Shape(2, 1, 1))) == 8


def test_add_sub_neg():
    x, y = w("1 2 | 1+2u 0"), w("2 2 | u 2")
    assert word_add(x, y) == w("0 1 | 1 2")
    assert word_sub(word_add(x, y), y) == x
    assert word_add(x, word_neg(x)) == zero_word(SHAPE)


def test_scalar_rule_r():
    # c = r + qu scales the Z_p block by r and the R block by c.
    x = w("1 2 | 1 u")
    assert scalar_mul_r(RElem(2, 0, 3), x) == w("2 1 | 2 2u")
    assert scalar_mul_r(RElem.u(3), x) == w("0 0 | u 0")
    assert scalar_mul_r(RElem(1, 1, 3), x) == w("1 2 | 1+1u u")


def test_scalar_rule_fp():
    x = w("1 2 | 1+2u u")
    assert scalar_mul_fp(2, x) == w("2 1 | 2+1u 2u")


def test_hadamard():
    x, y = w("1 2 | 1+1u u"), w("2 0 | 2 u")
    assert hadamard(x, y) == w("2 0 | 2+2u 0")


def test_inner_product_value():
    # v.w = u * (sum of Z_p products) + sum of R products.
    v, t = w("1 0 | u 0"), w("1 0 | 1 2")
    assert inner_product(v, t) == RElem(0, 2, 3)  # u*1 + u*1 = 2u


def test_inner_product_symmetric_and_bilinear():
    shape = Shape(2, 1, 1)
    words = list(iter_ambient(shape))
    for x in words:
        for y in words:
            assert inner_product(x, y) == inner_product(y, x)
            for z in words:
                assert inner_product(word_add(x, y), z) == inner_product(
                    x, z
                ) + inner_product(y, z)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_word("1 2 3 | 0 0", SHAPE)
    with pytest.raises(ValueError):
        parse_word("1 2 | 0", SHAPE)
    with pytest.raises(ValueError):
        parse_word("1 2 0 0", SHAPE)
    with pytest.raises(ValueError):
        parse_word("3 0 | 0 0", SHAPE)


@given(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.tuples(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
    ),
)
def test_format_parse_roundtrip(fp, r):
    word = MixedWord(SHAPE, fp, r)
    assert parse_word(format_word(word), SHAPE) == word
