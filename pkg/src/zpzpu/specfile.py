"""Code-spec files: a small UTF-8 text format for presenting a code.

    # optional comments
    p = 3
    alpha = 1
    beta = 4
    rows:
    1 | 0 0 1 1
    0 | 1 0 2 0

Header lines give the shape; each row uses the word grammar (Z_p entries,
a "|" separator, R entries such as "2u" or "1+2u").  Printing a parsed
document and re-parsing it reproduces it bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from zpzpu.code import AdditiveCode
from zpzpu.ring import is_prime
from zpzpu.words import MixedWord, Shape, format_word, parse_word

MAX_DIAGNOSTICS = 20


@dataclass(frozen=True)
class Diagnostic:
    line: int  # 1-based
    column: int  # 1-based
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class CodeSpecError(ValueError):
    """Raised when a code-spec document cannot be parsed."""

    def __init__(self, diagnostics: tuple[Diagnostic, ...]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class CodeSpecDocument:
    shape: Shape
    rows: tuple[MixedWord, ...]
    diagnostics: tuple[Diagnostic, ...] = field(default_factory=tuple)

    def code(self) -> AdditiveCode:
        return AdditiveCode(self.shape, self.rows)


def _token_column(line: str, token: str) -> int:
    pos = line.find(token)
    return pos + 1 if pos >= 0 else 1


def parse_code_spec(text: str) -> CodeSpecDocument:
    """Parse a document; raises CodeSpecError carrying positioned diagnostics."""
    diags: list[Diagnostic] = []
    header: dict[str, int] = {}
    row_lines: list[tuple[int, str]] = []
    in_rows = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_rows:
            if line == "rows:":
                in_rows = True
                continue
            key, eq, value = (part.strip() for part in line.partition("="))
            if eq != "=" or key not in ("p", "alpha", "beta"):
                diags.append(Diagnostic(lineno, 1, f"expected header line, got {line!r}"))
                continue
            try:
                header[key] = int(value)
            except ValueError:
                diags.append(
                    Diagnostic(lineno, _token_column(raw, value), f"not an integer: {value!r}")
                )
        else:
            row_lines.append((lineno, raw))

    for key in ("p", "alpha", "beta"):
        if key not in header:
            diags.append(Diagnostic(1, 1, f"missing header '{key} = <int>'"))
    if diags:
        raise CodeSpecError(tuple(diags[:MAX_DIAGNOSTICS]))

    if not is_prime(header["p"]):
        raise CodeSpecError((Diagnostic(1, 1, f"p = {header['p']} is not prime"),))
    try:
        shape = Shape(header["p"], header["alpha"], header["beta"])
    except ValueError as exc:
        raise CodeSpecError((Diagnostic(1, 1, str(exc)),)) from exc

    rows: list[MixedWord] = []
    for lineno, raw in row_lines:
        try:
            rows.append(parse_word(raw.strip(), shape))
        except ValueError as exc:
            msg = str(exc)
            token = msg.split("'")[1] if "'" in msg else raw.strip()
            diags.append(Diagnostic(lineno, _token_column(raw, token), msg))
            if len(diags) >= MAX_DIAGNOSTICS:
                break
    if diags:
        raise CodeSpecError(tuple(diags[:MAX_DIAGNOSTICS]))
    return CodeSpecDocument(shape, tuple(rows))


def print_code_spec(doc: CodeSpecDocument) -> str:
    """Canonical text form; parse(print(doc)) == doc."""
    lines = [
        f"p = {doc.shape.p}",
        f"alpha = {doc.shape.alpha}",
        f"beta = {doc.shape.beta}",
        "rows:",
    ]
    lines.extend(format_word(w) for w in doc.rows)
    return "\n".join(lines) + "\n"


def load_code_spec(path: str) -> CodeSpecDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_code_spec(fh.read())
