import pytest

from zpzpu.code import (
    AdditiveCode,
    BudgetExceeded,
    dual_exhaustive,
    dual_nullspace,
    dual_oracle,
    min_distance,
    parity_check_formula,
    standard_form,
)
from zpzpu.words import Shape, inner_product, parse_word, zero_word


def make_code(p, alpha, beta, rows):
    shape = Shape(p, alpha, beta)
    return AdditiveCode(shape, [parse_word(r, shape) for r in rows])


@pytest.fixture
def worked_example():
    return make_code(
        3, 1, 4, ["1 | 0 0 1 1", "0 | 1 0 2 0", "0 | 0 u 0 2u", "0 | 0 0 u 0"]
    )


def test_enumeration_closure(worked_example):
    words = worked_example.codewords()
    assert len(words) == 729
    ws = worked_example.wordset()
    # closed under addition on a sample
    for a in words[:15]:
        for b in words[:15]:
            from zpzpu.words import word_add

            assert word_add(a, b) in ws


def test_budget_exceeded():
    code = make_code(3, 1, 4, ["1 | 0 0 1 1", "0 | 1 0 2 0"])
    with pytest.raises(BudgetExceeded):
        code.codewords(budget=10)


def test_standard_form_type(worked_example):
    sf = standard_form(worked_example)
    assert (sf.k0, sf.k1, sf.kappa) == (2, 2, 0)
    assert sf.code_type.size == 729
    assert str(sf.code_type) == "(3; 1, 4; 2, 2)"
    # reduction preserves the code
    assert sf.code().wordset() == worked_example.wordset()
    # u rows carry only u-multiples in the R block
    for row in sf.u_rows:
        assert all(a == 0 for a, _ in row.r)


def test_standard_form_pure_zp_row():
    code = make_code(3, 2, 1, ["1 2 | 0", "0 0 | u"])
    sf = standard_form(code)
    assert sf.kappa == 1
    assert sf.k0 == 0 and sf.k1 == 2
    assert code.size() == 9 == sf.code_type.size


def test_dual_strategies_agree(worked_example):
    by_scan = dual_exhaustive(worked_example)
    by_null = dual_nullspace(worked_example)
    assert by_scan.wordset() == by_null.wordset()
    assert by_scan.size() == 27
    assert worked_example.size() * by_scan.size() == worked_example.shape.ambient_size


def test_dual_is_orthogonal(worked_example):
    dual = dual_oracle(worked_example)
    for d in dual.codewords():
        for g in worked_example.generators:
            assert inner_product(g, d).is_zero()


def test_double_dual():
    code = make_code(2, 2, 2, ["1 0 | 1 u", "0 1 | u 0"])
    dd = dual_oracle(dual_nullspace(code))
    assert dd.wordset() == code.wordset()


def test_parity_check_formula_on_torsion_only():
    # all-torsion generator: the block formula rows must be genuine dual words
    code = make_code(3, 0, 2, ["| u 2u"])
    sf = standard_form(code)
    report = parity_check_formula(sf)
    dual = dual_oracle(code)
    assert not report.ill_typed
    words = report.well_typed_words()
    assert words and all(dual.contains(w) for w in words)


def test_parity_check_formula_worked_example(worked_example):
    report = parity_check_formula(standard_form(worked_example))
    # formula rows are produced but need not be orthogonal when free rows
    # carry Z_p-block entries; the report just measures it
    assert len(report.h_rows) == 3  # m + k1 = 1 + 2 over alpha + beta = 5 columns
    assert report.non_orthogonal  # documented mismatch for this input


def test_min_distance():
    code = make_code(3, 1, 1, ["1 | 1"])
    assert min_distance(code, "gray") == 2
    assert min_distance(code, "hamming-of-gray-image") == 2
    with pytest.raises(ValueError):
        min_distance(AdditiveCode(Shape(3, 1, 1), [zero_word(Shape(3, 1, 1))]))
