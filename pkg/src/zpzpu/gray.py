"""Gray maps, Gray weights, weight enumerators, and MacWilliams checking.

Two weights per coordinate are kept side by side:

* ``gray_weight``: the corrected weight, defined as the Hamming weight of the
  coordinate Gray image (b, a+b).  Weight/distance preservation under the
  extended Gray map then holds by construction.
* ``gray_weight_paper_cases``: the literal three-case table from the source
  text (0 for zero; 2 when the coordinate is a + u(p-b) with a, b nonzero and
  a != b; 1 otherwise).  The two disagree exactly on the nonzero u-multiples,
  and ``weight_discrepancy_report`` computes that set rather than assuming it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Literal, Sequence

from zpzpu.code import AdditiveCode, BudgetExceeded, DEFAULT_BUDGET, dual_oracle
from zpzpu.linalg import nullspace, rref
from zpzpu.ring import RElem
from zpzpu.words import MixedWord, word_sub

Ordering = Literal["interleaved", "blockwise"]


def phi(w: MixedWord, ordering: Ordering = "interleaved") -> tuple[int, ...]:
    """Extended Gray map into Z_p^(alpha+2beta).

    interleaved: (a | psi(b_0), psi(b_1), ...) with the pairs kept in place.
    blockwise:   (a | b-parts..., (a+b)-parts...), the layout that makes the
                 image of the mixed cyclic shift a per-block rotation.
    """
    p = w.shape.p
    if ordering == "interleaved":
        out = list(w.fp)
        for a, b in w.r:
            out.append(b)
            out.append((a + b) % p)
        return tuple(out)
    if ordering == "blockwise":
        return (
            w.fp
            + tuple(b for _, b in w.r)
            + tuple((a + b) % p for a, b in w.r)
        )
    raise ValueError(f"unknown ordering {ordering!r}")


def hamming_weight(vec: Sequence[int]) -> int:
    return sum(1 for v in vec if v)


def gray_weight(w: MixedWord) -> int:
    """Corrected Gray weight: Hamming weight of the Gray image.

    Each R coordinate a + ub contributes [b != 0] + [a + b != 0]; each Z_p
    coordinate contributes [a != 0].
    """
    p = w.shape.p
    total = sum(1 for a in w.fp if a)
    for a, b in w.r:
        total += (1 if b else 0) + (1 if (a + b) % p else 0)
    return total


def paper_case_weight_r(a: int, b: int, p: int) -> int:
    """Literal case table for one R coordinate a + ub.

    Weight 2 requires the coordinate to equal a' + u(p - b') with a', b'
    nonzero and a' != b'; that unwinds to a != 0, b != 0, a + b != 0 mod p.
    """
    if a == 0 and b == 0:
        return 0
    if a != 0 and b != 0 and (a + b) % p != 0:
        return 2
    return 1


def gray_weight_paper_cases(w: MixedWord) -> int:
    """Sum of the literal case table over all coordinates."""
    p = w.shape.p
    total = sum(1 for a in w.fp if a)
    for a, b in w.r:
        total += paper_case_weight_r(a, b, p)
    return total


def weight_discrepancy_report(p: int) -> tuple[tuple[RElem, int, int], ...]:
    """All R coordinates where the case table and the corrected weight differ.

    Exhaustive over the p^2 elements; entries are (element, case-table value,
    corrected value), canonically sorted.
    """
    if p > 13:
        raise ValueError("discrepancy report is restricted to p <= 13")
    out = []
    for a in range(p):
        for b in range(p):
            paper = paper_case_weight_r(a, b, p)
            corrected = (1 if b else 0) + (1 if (a + b) % p else 0)
            if paper != corrected:
                out.append((RElem(a, b, p), paper, corrected))
    return tuple(sorted(out, key=lambda t: (t[0].a, t[0].b)))


def gray_distance(x: MixedWord, y: MixedWord) -> int:
    """d(x, y) = corrected Gray weight of x - y."""
    return gray_weight(word_sub(x, y))


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of W(x, y) = sum x^(n-w) y^w over the code."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need exactly n+1 coefficients")

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def coeff_line(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    def polynomial(self) -> str:
        terms = []
        for w, a in enumerate(self.coeffs):
            if a == 0:
                continue
            parts = [] if a == 1 and w < self.n else ([str(a)] if a > 1 else [])
            xe = self.n - w
            if xe == 1:
                parts.append("x")
            elif xe > 1:
                parts.append(f"x^{xe}")
            if w == 1:
                parts.append("y")
            elif w > 1:
                parts.append(f"y^{w}")
            if not parts:
                parts = [str(a)]
            terms.append(" ".join(parts))
        return " + ".join(terms) if terms else "0"


def weight_enumerator(
    code: AdditiveCode,
    weight: Literal["gray", "paper-cases"] = "gray",
    budget: int = DEFAULT_BUDGET,
) -> WeightEnumerator:
    """Exact coefficient counts over all codewords; n = alpha + 2*beta."""
    n = code.shape.n
    weigh = gray_weight if weight == "gray" else gray_weight_paper_cases
    coeffs = [0] * (n + 1)
    for w in code.codewords(budget):
        coeffs[weigh(w)] += 1
    return WeightEnumerator(n, tuple(coeffs))


def macwilliams_transform(coeffs: Sequence[int], q: int) -> tuple[int, ...]:
    """Coefficients of W(X + (q-1)Y, X - Y), exactly, in integer arithmetic.

    Input A_i are the coefficients of x^(n-i) y^i; the output is the
    coefficient vector of the transformed homogeneous polynomial (the
    right-hand side of the MacWilliams identity before dividing by |C|).
    """
    n = len(coeffs) - 1
    out = [0] * (n + 1)
    for i, a_i in enumerate(coeffs):
        if a_i == 0:
            continue
        # (X + (q-1)Y)^(n-i) convolved with (X - Y)^i, as Y-degree vectors.
        e1 = [comb(n - i, k) * (q - 1) ** k for k in range(n - i + 1)]
        e2 = [comb(i, k) * (-1) ** k for k in range(i + 1)]
        for k1, c1 in enumerate(e1):
            for k2, c2 in enumerate(e2):
                out[k1 + k2] += a_i * c1 * c2
    return tuple(out)


# ---------------------------------------------------------------------------
# Gray-image linear codes over Z_p
# ---------------------------------------------------------------------------

def gray_image_vectors(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> frozenset:
    return frozenset(phi(w) for w in code.codewords(budget))


def _span_vectors(basis: list[list[int]], p: int) -> frozenset:
    vecs = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        n = len(basis[0]) if basis else 0
        acc = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                acc = [(x + c * y) % p for x, y in zip(acc, row)]
        vecs.add(tuple(acc))
    return frozenset(vecs)


def gray_image_dual_vectors(
    code: AdditiveCode, budget: int = DEFAULT_BUDGET
) -> frozenset:
    """Euclidean dual of the Z_p-linear Gray image, as an explicit vector set."""
    p = code.shape.p
    n = code.shape.n
    vecs = sorted(gray_image_vectors(code, budget))
    basis, _ = rref([list(v) for v in vecs], p)
    null = nullspace(basis, n, p)
    if p ** len(null) > budget:
        raise BudgetExceeded(budget, p ** len(null))
    return _span_vectors(null, p)


def hamming_enumerator(vectors: frozenset, n: int) -> WeightEnumerator:
    coeffs = [0] * (n + 1)
    for v in vectors:
        coeffs[hamming_weight(v)] += 1
    return WeightEnumerator(n, tuple(coeffs))


# ---------------------------------------------------------------------------
# MacWilliams checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class MacWilliamsReport:
    """Three independent instantiations of the MacWilliams identity.

    (i)   mixed dual with the corrected Gray weight and q = p,
    (ii)  classical identity for the Z_p-linear Gray image vs its Euclidean
          dual (must always hold; a failure is an implementation bug),
    (iii) set equality between the Gray image of the mixed dual and the
          Euclidean dual of the Gray image.
    """

    mixed_transform: ClauseResult
    gray_image_classical: ClauseResult
    image_dual_equality: ClauseResult

    @property
    def clauses(self) -> tuple[ClauseResult, ...]:
        return (
            self.mixed_transform,
            self.gray_image_classical,
            self.image_dual_equality,
        )


def _compare_enumerators(lhs: Sequence[int], rhs: Sequence[int]) -> ClauseResult:
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return ClauseResult("", False, f"first differing coefficient k={k}: {a} vs {b}")
    return ClauseResult("", True, "coefficient vectors identical")


def macwilliams_check(
    code: AdditiveCode, budget: int = DEFAULT_BUDGET
) -> MacWilliamsReport:
    """Evaluate all three MacWilliams clauses exactly (see MacWilliamsReport)."""
    q = code.shape.p
    n = code.shape.n
    dual = dual_oracle(code, "both", budget)
    size = code.size(budget)

    w_code = weight_enumerator(code, "gray", budget)
    w_dual = weight_enumerator(dual, "gray", budget)
    lhs = tuple(size * c for c in w_dual.coeffs)
    rhs = macwilliams_transform(w_code.coeffs, q)
    cmp1 = _compare_enumerators(lhs, rhs)
    clause_i = ClauseResult("mixed-transform", cmp1.passed, cmp1.detail)

    image = gray_image_vectors(code, budget)
    image_dual = gray_image_dual_vectors(code, budget)
    w_img = hamming_enumerator(image, n)
    w_img_dual = hamming_enumerator(image_dual, n)
    lhs2 = tuple(len(image) * c for c in w_img_dual.coeffs)
    rhs2 = macwilliams_transform(w_img.coeffs, q)
    cmp2 = _compare_enumerators(lhs2, rhs2)
    clause_ii = ClauseResult("gray-image-classical", cmp2.passed, cmp2.detail)

    phi_of_dual = gray_image_vectors(dual, budget)
    equal = phi_of_dual == image_dual
    detail = (
        "Phi(dual) equals the Euclidean dual of Phi(C)"
        if equal
        else (
            f"set mismatch: |Phi(dual)| = {len(phi_of_dual)}, "
            f"|Phi(C) dual| = {len(image_dual)}, "
            f"intersection {len(phi_of_dual & image_dual)}"
        )
    )
    clause_iii = ClauseResult("image-dual-equality", equal, detail)

    return MacWilliamsReport(clause_i, clause_ii, clause_iii)
