import pytest

from zpzpu.specfile import (
    CodeSpecError,
    parse_code_spec,
    print_code_spec,
)

MINIMAL = "p = 3\nalpha = 1\nbeta = 1\nrows:\n1 | u\n"


def test_parse_minimal():
    doc = parse_code_spec(MINIMAL)
    assert doc.shape.p == 3 and doc.shape.alpha == 1 and doc.shape.beta == 1
    assert len(doc.rows) == 1


def test_roundtrip():
    doc = parse_code_spec(MINIMAL)
    assert parse_code_spec(print_code_spec(doc)) == doc
    assert print_code_spec(parse_code_spec(print_code_spec(doc))) == print_code_spec(doc)


def test_comments_and_blank_lines():
    text = "# a comment\np = 3\n\nalpha = 1\nbeta = 1\nrows:\n# another\n1 | 0\n"
    assert len(parse_code_spec(text).rows) == 1


def test_nonprime_p():
    with pytest.raises(CodeSpecError) as exc:
        parse_code_spec("p = 4\nalpha = 1\nbeta = 1\nrows:\n1 | 0\n")
    assert "not prime" in str(exc.value)


def test_out_of_range_entry_has_position():
    with pytest.raises(CodeSpecError) as exc:
        parse_code_spec("p = 3\nalpha = 1\nbeta = 1\nrows:\n1 | 3u\n")
    (diag,) = exc.value.diagnostics
    assert diag.line == 5
    assert "3u" in diag.message


def test_arity_mismatch():
    with pytest.raises(CodeSpecError) as exc:
        parse_code_spec("p = 3\nalpha = 2\nbeta = 1\nrows:\n1 | 0\n")
    assert "expected 2" in str(exc.value)


def test_missing_header():
    with pytest.raises(CodeSpecError) as exc:
        parse_code_spec("p = 3\nrows:\n")
    msgs = [d.message for d in exc.value.diagnostics]
    assert any("alpha" in m for m in msgs) and any("beta" in m for m in msgs)


def test_diagnostics_capped_at_20():
    bad_rows = "\n".join("9 | 9" for _ in range(50))
    with pytest.raises(CodeSpecError) as exc:
        parse_code_spec(f"p = 3\nalpha = 1\nbeta = 1\nrows:\n{bad_rows}\n")
    assert len(exc.value.diagnostics) == 20
