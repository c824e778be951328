"""Additive codes: enumeration, membership, standard form, duals, distances.

A code is the closure of its generator rows under word addition and the
R-scalar action (so each generator contributes up to p^2 multiples).  All
operations here are exact and desk-scale; enumeration is the ground-truth
oracle that the closed-form constructions are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional

from zpzpu.linalg import nullspace
from zpzpu.ring import RElem, format_r_entry
from zpzpu.words import (
    MixedWord,
    Shape,
    inner_product,
    iter_ambient,
    scalar_mul_r,
    word_add,
    zero_word,
)

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured word budget."""

    def __init__(self, budget: int, needed: int):
        super().__init__(
            f"enumeration budget {budget} exceeded (would need about {needed} words)"
        )
        self.budget = budget
        self.needed = needed


def _scalar_multiples(g: MixedWord) -> list[MixedWord]:
    """All p^2 scalar multiples c*g for c in R (deduplicated, sorted)."""
    p = g.shape.p
    seen = {}
    for r in range(p):
        for q in range(p):
            m = scalar_mul_r(RElem(r, q, p), g)
            seen[m.key()] = m
    return [seen[k] for k in sorted(seen)]


class AdditiveCode:
    """An additive code presented by generator rows over Z_p^alpha x R^beta."""

    def __init__(self, shape: Shape, generators: Iterable[MixedWord]):
        self.shape = shape
        self.generators = tuple(generators)
        for g in self.generators:
            if g.shape != shape:
                raise ValueError(f"generator shape {g.shape} does not match {shape}")
        self._words: Optional[tuple[MixedWord, ...]] = None
        self._wordset: Optional[frozenset[MixedWord]] = None

    @classmethod
    def from_words(cls, shape: Shape, words: Iterable[MixedWord]) -> "AdditiveCode":
        """Wrap an explicit codeword set (assumed closed) as a code."""
        ordered = tuple(sorted(words, key=MixedWord.key))
        code = cls(shape, ordered)
        code._words = ordered
        code._wordset = frozenset(ordered)
        return code

    def codewords(self, budget: int = DEFAULT_BUDGET) -> tuple[MixedWord, ...]:
        """The exact codeword set, canonically sorted and cached.

        Computed as an incremental module closure: the partial span is always a
        subgroup, so a generator whose multiples already lie inside it is free.
        """
        if self._words is not None:
            return self._words
        span = {zero_word(self.shape)}
        for g in self.generators:
            mult = _scalar_multiples(g)
            if all(m in span for m in mult):
                continue
            needed = len(span) * len(mult)
            if needed > budget:
                raise BudgetExceeded(budget, needed)
            span = {word_add(w, m) for w in span for m in mult}
        self._words = tuple(sorted(span, key=MixedWord.key))
        self._wordset = frozenset(self._words)
        return self._words

    def wordset(self, budget: int = DEFAULT_BUDGET) -> frozenset[MixedWord]:
        self.codewords(budget)
        assert self._wordset is not None
        return self._wordset

    def size(self, budget: int = DEFAULT_BUDGET) -> int:
        return len(self.codewords(budget))

    def contains(self, w: MixedWord, budget: int = DEFAULT_BUDGET) -> bool:
        if w.shape != self.shape:
            raise ValueError(f"shape mismatch: {w.shape} vs {self.shape}")
        return w in self.wordset(budget)

    def __repr__(self) -> str:
        return (
            f"AdditiveCode(p={self.shape.p}, alpha={self.shape.alpha}, "
            f"beta={self.shape.beta}, generators={len(self.generators)})"
        )


@dataclass(frozen=True)
class CodeType:
    """Type parameters (p; alpha, beta; k0, k1); kappa counts pure-Z_p torsion rows."""

    p: int
    alpha: int
    beta: int
    k0: int
    k1: int
    kappa: int = 0

    @property
    def size(self) -> int:
        return self.p ** (2 * self.k0 + self.k1)

    def __str__(self) -> str:
        return f"({self.p}; {self.alpha}, {self.beta}; {self.k0}, {self.k1})"


@dataclass(frozen=True)
class StandardForm:
    """Result of mixed-module row reduction.

    Rows stay in the original coordinate order; pivot lists record where each
    row class (free / u-torsion / pure-Z_p torsion) has its leading entry.
    ``col_perm`` gathers pivot columns first, permuting only within the Z_p
    block and within the R block.
    """

    shape: Shape
    free_rows: tuple[MixedWord, ...]
    free_pivots: tuple[int, ...]  # R-block column indices
    u_rows: tuple[MixedWord, ...]
    u_pivots: tuple[int, ...]  # R-block column indices
    zp_rows: tuple[MixedWord, ...]
    zp_pivots: tuple[int, ...]  # Z_p-block column indices
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def k0(self) -> int:
        return len(self.free_rows)

    @property
    def k1(self) -> int:
        # Extended counting convention: pure-Z_p torsion rows count inside k1.
        return len(self.u_rows) + len(self.zp_rows)

    @property
    def kappa(self) -> int:
        return len(self.zp_rows)

    @property
    def rows(self) -> tuple[MixedWord, ...]:
        return self.free_rows + self.u_rows + self.zp_rows

    @property
    def code_type(self) -> CodeType:
        return CodeType(
            self.shape.p, self.shape.alpha, self.shape.beta,
            self.k0, self.k1, self.kappa,
        )

    @property
    def col_perm(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(Z_p-block order, R-block order): pivot columns first, rest ascending."""
        zp_rest = [i for i in range(self.shape.alpha) if i not in self.zp_pivots]
        r_pivots = list(self.free_pivots) + list(self.u_pivots)
        r_rest = [j for j in range(self.shape.beta) if j not in r_pivots]
        return (
            tuple(self.zp_pivots) + tuple(zp_rest),
            tuple(r_pivots) + tuple(r_rest),
        )

    def reduced_columns(self) -> tuple[tuple[str, int], ...]:
        """Column order of the block layout [I | torsion pivots | rest].

        Free pivots (R block), then u pivots (R block), then pure-Z_p pivots,
        then the remaining Z_p columns, then the remaining R columns.  Each
        entry is ("zp", i) or ("r", j) in original block-local indices.
        """
        used_r = set(self.free_pivots) | set(self.u_pivots)
        rest_zp = [
            ("zp", i) for i in range(self.shape.alpha) if i not in self.zp_pivots
        ]
        rest_r = [("r", j) for j in range(self.shape.beta) if j not in used_r]
        cols = (
            [("r", j) for j in self.free_pivots]
            + [("r", j) for j in self.u_pivots]
            + [("zp", i) for i in self.zp_pivots]
            + rest_zp
            + rest_r
        )
        return tuple(cols)

    def code(self) -> AdditiveCode:
        return AdditiveCode(self.shape, self.rows)


class _Row:
    """Mutable row for elimination."""

    __slots__ = ("fp", "r")

    def __init__(self, w: MixedWord):
        self.fp = list(w.fp)
        self.r = [list(e) for e in w.r]

    def to_word(self, shape: Shape) -> MixedWord:
        return MixedWord(shape, tuple(self.fp), tuple((a, b) for a, b in self.r))

    def is_zero(self) -> bool:
        return not any(self.fp) and not any(a or b for a, b in self.r)


def _row_scale(row: _Row, c: RElem, p: int) -> None:
    r, q = c.a, c.b
    row.fp = [(r * a) % p for a in row.fp]
    row.r = [[(r * a) % p, (r * b + q * a) % p] for a, b in row.r]


def _row_submul(row: _Row, c: RElem, piv: _Row, p: int) -> None:
    """row -= c * piv under the rule-(2) scalar action."""
    r, q = c.a, c.b
    row.fp = [(a - r * pa) % p for a, pa in zip(row.fp, piv.fp)]
    row.r = [
        [(a - r * pa) % p, (b - (r * pb + q * pa)) % p]
        for (a, b), (pa, pb) in zip(row.r, piv.r)
    ]


def standard_form(code: AdditiveCode) -> StandardForm:
    """Mixed-module elimination into the extended standard form.

    Three pivot classes, scanned deterministically (columns left to right,
    ties broken by lowest row index):

      1. unit pivots in the R block (free rows, order p^2),
      2. u pivots in the R block (torsion rows, order p); the u-parts of the
         other rows' entries in the pivot column are cleared as well,
      3. pure-Z_p pivots found by Gaussian elimination in the Z_p block
         (torsion rows that the two-block layout cannot host; counted in k1
         and reported in the notes).
    """
    shape = code.shape
    p = shape.p
    rows = [_Row(g) for g in code.generators]
    unclassified = list(range(len(rows)))
    notes: list[str] = []

    free: list[tuple[int, int]] = []  # (pivot R column, row index)
    for j in range(shape.beta):
        pivot = next((i for i in unclassified if rows[i].r[j][0] != 0), None)
        if pivot is None:
            continue
        e = rows[pivot].r[j]
        _row_scale(rows[pivot], RElem(e[0], e[1], p).inverse(), p)
        for i in range(len(rows)):
            if i == pivot:
                continue
            a, b = rows[i].r[j]
            if a or b:
                _row_submul(rows[i], RElem(a, b, p), rows[pivot], p)
        free.append((j, pivot))
        unclassified.remove(pivot)

    torsion: list[tuple[int, int]] = []
    free_cols = {j for j, _ in free}
    for j in range(shape.beta):
        if j in free_cols:
            continue
        pivot = next((i for i in unclassified if rows[i].r[j][1] != 0), None)
        if pivot is None:
            continue
        b = rows[pivot].r[j][1]
        _row_scale(rows[pivot], RElem(pow(b, -1, p), 0, p), p)
        for i in range(len(rows)):
            if i == pivot:
                continue
            bi = rows[i].r[j][1]
            if bi:
                _row_submul(rows[i], RElem(bi, 0, p), rows[pivot], p)
        torsion.append((j, pivot))
        unclassified.remove(pivot)

    zp: list[tuple[int, int]] = []
    for col in range(shape.alpha):
        pivot = next((i for i in unclassified if rows[i].fp[col] != 0), None)
        if pivot is None:
            continue
        _row_scale(rows[pivot], RElem(pow(rows[pivot].fp[col], -1, p), 0, p), p)
        for i in range(len(rows)):
            if i == pivot:
                continue
            v = rows[i].fp[col]
            if v:
                _row_submul(rows[i], RElem(v, 0, p), rows[pivot], p)
        zp.append((col, pivot))
        unclassified.remove(pivot)

    for idx in unclassified:
        if not rows[idx].is_zero():  # pragma: no cover - elimination is complete
            raise AssertionError("elimination left a nonzero unclassified row")

    for j, i in torsion:
        if any(rows[i].fp):
            notes.append(
                f"u-pivot row at R column {j} carries Z_p-block entries; "
                "outside the two-block layout"
            )
    for col, _ in zp:
        notes.append(
            f"pure-Z_p pivot row at Z_p column {col}; counted in k1"
        )

    return StandardForm(
        shape=shape,
        free_rows=tuple(rows[i].to_word(shape) for _, i in free),
        free_pivots=tuple(j for j, _ in free),
        u_rows=tuple(rows[i].to_word(shape) for _, i in torsion),
        u_pivots=tuple(j for j, _ in torsion),
        zp_rows=tuple(rows[i].to_word(shape) for _, i in zp),
        zp_pivots=tuple(c for c, _ in zp),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Duals
# ---------------------------------------------------------------------------

def dual_constraint_rows(code: AdditiveCode) -> list[list[int]]:
    """Each generator g yields two Z_p-linear constraints on w = (x | c + ud).

    Writing g = (v | a + ub), the inner product g.w vanishes iff
      sum_j a_j c_j = 0          (unit part)
      sum_i v_i x_i + sum_j (a_j d_j + b_j c_j) = 0   (u part)
    with unknowns ordered (x_0..x_{alpha-1}, c_0..c_{beta-1}, d_0..d_{beta-1}).
    """
    shape = code.shape
    alpha, beta = shape.alpha, shape.beta
    rows = []
    for g in code.generators:
        unit = [0] * alpha + [a for a, _ in g.r] + [0] * beta
        upart = list(g.fp) + [b for _, b in g.r] + [a for a, _ in g.r]
        rows.append(unit)
        rows.append(upart)
    return rows


def _vector_to_word(vec: list[int], shape: Shape) -> MixedWord:
    alpha, beta = shape.alpha, shape.beta
    fp = tuple(vec[:alpha])
    r = tuple((vec[alpha + j], vec[alpha + beta + j]) for j in range(beta))
    return MixedWord(shape, fp, r)


def dual_nullspace(code: AdditiveCode) -> AdditiveCode:
    """Dual via the Z_p nullspace of the expanded constraint system."""
    shape = code.shape
    basis = nullspace(dual_constraint_rows(code), shape.alpha + 2 * shape.beta, shape.p)
    return AdditiveCode(shape, [_vector_to_word(v, shape) for v in basis])


def dual_exhaustive(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    """Dual by scanning the whole ambient space against every generator."""
    shape = code.shape
    if shape.ambient_size > budget:
        raise BudgetExceeded(budget, shape.ambient_size)
    gens = code.generators
    words = [
        w
        for w in iter_ambient(shape)
        if all(inner_product(g, w).is_zero() for g in gens)
    ]
    return AdditiveCode.from_words(shape, words)


def dual_oracle(
    code: AdditiveCode,
    method: Literal["both", "exhaustive", "nullspace"] = "both",
    budget: int = DEFAULT_BUDGET,
) -> AdditiveCode:
    """The additive dual C-perp.

    "both" runs the exhaustive scan and the nullspace construction and insists
    they produce the same codeword set (this is an internal consistency
    invariant, not a claim under test).
    """
    if method == "exhaustive":
        return dual_exhaustive(code, budget)
    if method == "nullspace":
        return dual_nullspace(code)
    by_null = dual_nullspace(code)
    by_scan = dual_exhaustive(code, budget)
    if by_null.wordset(budget) != by_scan.wordset(budget):
        raise AssertionError("dual strategies disagree; arithmetic bug")
    return by_null


# ---------------------------------------------------------------------------
# Closed-form parity-check construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HRow:
    """A candidate dual generator row; Z_p-block entries may be ill-typed."""

    zp: tuple[tuple[int, int], ...]  # (a, b) pairs; b != 0 means ill-typed
    r: tuple[tuple[int, int], ...]

    def ill_typed_columns(self) -> tuple[int, ...]:
        return tuple(i for i, (_, b) in enumerate(self.zp) if b != 0)

    def well_typed(self) -> bool:
        return not self.ill_typed_columns()

    def to_word(self, shape: Shape) -> MixedWord:
        if not self.well_typed():
            raise ValueError("row has non-Z_p content in the Z_p block")
        return MixedWord(shape, tuple(a for a, _ in self.zp), self.r)

    def format(self, p: int) -> str:
        left = " ".join(format_r_entry(RElem(a, b, p)) for a, b in self.zp)
        right = " ".join(format_r_entry(RElem(a, b, p)) for a, b in self.r)
        if left and right:
            return f"{left} | {right}"
        return f"{left} |" if left else f"| {right}"


@dataclass(frozen=True)
class ParityCheckReport:
    """Literal block-formula parity-check matrix plus its audit.

    ``orthogonality`` lists (h_index, g_index, inner product) for every
    well-typed H row against every standard-form generator row; rows that put
    non-Z_p values into the Z_p block are flagged instead of coerced.
    """

    shape: Shape
    h_rows: tuple[HRow, ...]
    ill_typed: tuple[tuple[int, int], ...]  # (h row index, Z_p column)
    notes: tuple[str, ...]
    orthogonality: tuple[tuple[int, int, RElem], ...]

    @property
    def non_orthogonal(self) -> tuple[tuple[int, int, RElem], ...]:
        return tuple(t for t in self.orthogonality if not t[2].is_zero())

    def well_typed_words(self) -> tuple[MixedWord, ...]:
        return tuple(
            row.to_word(self.shape) for row in self.h_rows if row.well_typed()
        )


def parity_check_formula(sf: StandardForm) -> ParityCheckReport:
    """Build H = (-B^t + D^t A^t, -D^t, I; uA^t, -uI, 0) from the block layout.

    The formula is applied literally over the reduced column order and then
    un-permuted back to the input coordinates.  Entries that land in the Z_p
    block with a u component are reported as ill-typed; the orthogonality
    table against the generator rows is the deliverable, not agreement.
    """
    shape = sf.shape
    p = shape.p
    cols = sf.reduced_columns()
    k0, k1 = sf.k0, sf.k1
    n = shape.ncoords
    m = n - k0 - k1
    torsion_rows = sf.u_rows + sf.zp_rows
    notes: list[str] = []

    def entry(w: MixedWord, col: tuple[str, int]) -> RElem:
        kind, idx = col
        if kind == "zp":
            return RElem(w.fp[idx], 0, p)
        a, b = w.r[idx]
        return RElem(a, b, p)

    # Block matrices over the reduced order: A (k0 x k1), B (k0 x m), D (k1 x m).
    a_blk = [
        [entry(row, cols[k0 + j]) for j in range(k1)] for row in sf.free_rows
    ]
    b_blk = [
        [entry(row, cols[k0 + k1 + s]) for s in range(m)] for row in sf.free_rows
    ]
    d_blk: list[list[int]] = []
    for jr, row in enumerate(torsion_rows):
        d_row = []
        for s in range(m):
            e = entry(row, cols[k0 + k1 + s])
            kind, idx = cols[k0 + k1 + s]
            if kind == "r":
                # torsion rows hold u-multiples in the R block; u*d reads off b
                if e.a != 0:  # pragma: no cover - cannot survive elimination
                    raise AssertionError("unit content in a torsion row")
                d_row.append(e.b)
            else:
                if e.a != 0:
                    notes.append(
                        f"torsion row {jr} holds Z_p value {e.a} at Z_p column "
                        f"{idx}; not expressible as u*D"
                    )
                d_row.append(e.a)
        d_blk.append(d_row)

    zero = RElem.zero(p)
    one = RElem.one(p)
    u = RElem.u(p)

    reduced_rows: list[list[RElem]] = []
    for s in range(m):
        row = []
        for t in range(k0):
            acc = -b_blk[t][s]
            for j in range(k1):
                acc = acc + RElem(d_blk[j][s], 0, p) * a_blk[t][j]
            row.append(acc)
        for j in range(k1):
            row.append(RElem(-d_blk[j][s] % p, 0, p))
        for s2 in range(m):
            row.append(one if s2 == s else zero)
        reduced_rows.append(row)
    for j in range(k1):
        row = [u * a_blk[t][j] for t in range(k0)]
        for j2 in range(k1):
            row.append(-u if j2 == j else zero)
        row.extend([zero] * m)
        reduced_rows.append(row)

    h_rows: list[HRow] = []
    ill: list[tuple[int, int]] = []
    for ridx, row in enumerate(reduced_rows):
        zp_entries = [(0, 0)] * shape.alpha
        r_entries = [(0, 0)] * shape.beta
        for col, val in zip(cols, row):
            kind, idx = col
            if kind == "zp":
                zp_entries[idx] = (val.a, val.b)
            else:
                r_entries[idx] = (val.a, val.b)
        hrow = HRow(tuple(zp_entries), tuple(r_entries))
        for c in hrow.ill_typed_columns():
            ill.append((ridx, c))
        h_rows.append(hrow)

    table: list[tuple[int, int, RElem]] = []
    g_rows = sf.rows
    for hidx, hrow in enumerate(h_rows):
        if not hrow.well_typed():
            continue
        hw = hrow.to_word(shape)
        for gidx, g in enumerate(g_rows):
            table.append((hidx, gidx, inner_product(g, hw)))

    return ParityCheckReport(
        shape=shape,
        h_rows=tuple(h_rows),
        ill_typed=tuple(ill),
        notes=tuple(notes),
        orthogonality=tuple(table),
    )


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------

def min_distance(
    code: AdditiveCode,
    metric: Literal["gray", "hamming-of-gray-image"] = "gray",
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Minimum weight over nonzero codewords (equals the minimum distance)."""
    from zpzpu import gray

    words = code.codewords(budget)
    if len(words) < 2:
        raise ValueError("minimum distance is undefined for the trivial code")
    if metric == "gray":
        weigh = gray.gray_weight
    elif metric == "hamming-of-gray-image":
        def weigh(w: MixedWord) -> int:
            return gray.hamming_weight(gray.phi(w))
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return min(weigh(w) for w in words if not w.is_zero())
