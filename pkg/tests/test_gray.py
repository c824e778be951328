from zpzpu.code import AdditiveCode
from zpzpu.gray import (
    gray_distance,
    gray_weight,
    gray_weight_paper_cases,
    hamming_weight,
    macwilliams_check,
    macwilliams_transform,
    phi,
    weight_discrepancy_report,
    weight_enumerator,
)
from zpzpu.words import Shape, iter_ambient, parse_word, word_sub


def make_code(p, alpha, beta, rows):
    shape = Shape(p, alpha, beta)
    return AdditiveCode(shape, [parse_word(r, shape) for r in rows])


def test_phi_orderings():
    shape = Shape(3, 1, 2)
    w = parse_word("2 | 1+1u u", shape)
    # psi(1+u) = (1, 2), psi(u) = (1, 1)
    assert phi(w, "interleaved") == (2, 1, 2, 1, 1)
    assert phi(w, "blockwise") == (2, 1, 1, 2, 1)


def test_phi_is_additive():
    shape = Shape(3, 1, 1)
    words = list(iter_ambient(shape))
    for x in words:
        for y in words:
            got = phi(word_sub(x, y))
            want = tuple((a - b) % 3 for a, b in zip(phi(x), phi(y)))
            assert got == want


def test_gray_weight_matches_image():
    for shape in (Shape(2, 1, 2), Shape(3, 2, 1), Shape(5, 1, 1)):
        for w in iter_ambient(shape):
            assert gray_weight(w) == hamming_weight(phi(w))


def test_weight_values():
    shape = Shape(3, 0, 1)
    # 1 + 2u: psi = (2, 0), one nonzero image coordinate.
    assert gray_weight(parse_word("| 1+2u", shape)) == 1
    # u: psi = (1, 1), two nonzero image coordinates.
    assert gray_weight(parse_word("| u", shape)) == 2


def test_discrepancy_table_is_exactly_nonzero_u_multiples():
    for p in (2, 3, 5, 7):
        table = weight_discrepancy_report(p)
        got = {e for e, _, _ in table}
        want = {
            e
            for e in (type(next(iter(got)))(0, b, p) for b in range(1, p))
        } if table else set()
        assert table  # non-empty for every p
        assert got == want
        for elem, paper, corrected in table:
            assert paper == gray_weight_paper_cases(
                parse_word(f"| {elem.b}u" if elem.b > 1 else "| u", Shape(p, 0, 1))
            )
            assert corrected == 2 and paper == 1


def test_gray_distance_is_translation_invariant():
    shape = Shape(3, 1, 1)
    words = list(iter_ambient(shape))
    for x in words[:9]:
        for y in words[:9]:
            assert gray_distance(x, y) == gray_weight(word_sub(x, y))


def test_weight_enumerator_and_transform():
    code = make_code(3, 1, 1, ["1 | 1"])
    enum = weight_enumerator(code)
    assert enum.total == 9
    assert enum.coeffs[0] == 1
    # binary repetition sanity for the classical transform: C = {00, 11}
    assert macwilliams_transform((1, 0, 1), 2) == (2, 0, 2)


def test_macwilliams_clauses():
    code = make_code(3, 1, 2, ["1 | 1 u", "0 | u 1"])
    report = macwilliams_check(code)
    assert report.gray_image_classical.passed
    for clause in report.clauses:
        assert clause.name and clause.detail
