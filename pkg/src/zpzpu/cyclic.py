"""Cyclic structure: shift operator, Z_p[x] and R[x] arithmetic, ideal codes.

A code is cyclic when it is closed under the simultaneous right rotation of
its Z_p block and its R block.  Under the coefficient bijection this shift is
multiplication by x in Z_p[x]/(x^alpha - 1) x R[x]/(x^beta - 1), so cyclic
codes are ideals presented by a kernel generator (f, 0) and image generators
(h1, g + u*p) and (h2, u*q).

Polynomials are coefficient tuples, lowest degree first, trailing zeros
stripped (the zero polynomial is the empty tuple).  R[x] polynomials use
(a, b) coefficient pairs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from zpzpu.code import AdditiveCode, DEFAULT_BUDGET
from zpzpu.words import MixedWord, Shape

FpPoly = tuple[int, ...]
RPoly = tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# Z_p[x] arithmetic
# ---------------------------------------------------------------------------

def fp_poly(coeffs, p: int) -> FpPoly:
    """Canonical trimmed form of a coefficient sequence mod p."""
    c = [v % p for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def fp_poly_deg(a: FpPoly) -> int:
    return len(a) - 1  # zero polynomial has degree -1


def fp_poly_add(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    n = max(len(a), len(b))
    return fp_poly(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
        p,
    )


def fp_poly_neg(a: FpPoly, p: int) -> FpPoly:
    return tuple(-v % p for v in a)


def fp_poly_sub(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    return fp_poly_add(a, fp_poly_neg(b, p), p)


def fp_poly_mul(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return fp_poly(out, p)


def fp_poly_divmod(a: FpPoly, b: FpPoly, p: int) -> tuple[FpPoly, FpPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    for shift in range(len(a) - len(b), -1, -1):
        coeff = (rem[shift + len(b) - 1] * inv) % p
        if coeff:
            quo[shift] = coeff
            for i, bv in enumerate(b):
                rem[shift + i] = (rem[shift + i] - coeff * bv) % p
    return fp_poly(quo, p), fp_poly(rem, p)


def fp_poly_divides(a: FpPoly, b: FpPoly, p: int) -> bool:
    """True when a divides b (the zero polynomial divides only itself)."""
    if not a:
        return not b
    return not fp_poly_divmod(b, a, p)[1]


def fp_poly_monic(a: FpPoly, p: int) -> FpPoly:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return fp_poly([v * inv for v in a], p)


def fp_poly_gcd(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    while b:
        a, b = b, fp_poly_divmod(a, b, p)[1]
    return fp_poly_monic(a, p)


def fp_poly_lcm(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not a or not b:
        return ()
    g = fp_poly_gcd(a, b, p)
    q, _ = fp_poly_divmod(fp_poly_mul(a, b, p), g, p)
    return fp_poly_monic(q, p)


def reduce_mod_xn_minus_1(a: FpPoly, n: int, p: int) -> FpPoly:
    """Representative of degree < n in Z_p[x]/(x^n - 1) (fold exponents mod n)."""
    out = [0] * n
    for i, v in enumerate(a):
        out[i % n] = (out[i % n] + v) % p
    return fp_poly(out, p)


def xn_minus_1(n: int, p: int) -> FpPoly:
    return fp_poly([-1] + [0] * (n - 1) + [1], p)


def format_fp_poly(a: FpPoly) -> str:
    if not a:
        return "0"
    terms = []
    for i, v in enumerate(a):
        if v == 0:
            continue
        if i == 0:
            terms.append(str(v))
        else:
            xs = "x" if i == 1 else f"x^{i}"
            terms.append(xs if v == 1 else f"{v} {xs}")
    return " + ".join(terms)


def parse_fp_poly(text: str, p: int) -> FpPoly:
    """Parse "c0 + c1 x + c2 x^2" style input (also accepts bare "0")."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise ValueError(f"empty term in polynomial {text!r}")
        if "x" in term:
            coef_part, _, exp_part = term.partition("x")
            coef = int(coef_part) if coef_part.strip() else 1
            exp_part = exp_part.strip()
            if exp_part.startswith("^"):
                exp = int(exp_part[1:])
            elif exp_part == "":
                exp = 1
            else:
                raise ValueError(f"cannot parse term {term!r}")
        else:
            coef = int(term)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + coef
    n = max(coeffs) + 1
    return fp_poly([coeffs.get(i, 0) for i in range(n)], p)


# ---------------------------------------------------------------------------
# R[x] arithmetic (limited: addition and multiplication suffice here)
# ---------------------------------------------------------------------------

def r_poly(pairs, p: int) -> RPoly:
    c = [(a % p, b % p) for a, b in pairs]
    while c and c[-1] == (0, 0):
        c.pop()
    return tuple(c)


def r_poly_from_parts(unit: FpPoly, upart: FpPoly, p: int) -> RPoly:
    n = max(len(unit), len(upart))
    return r_poly(
        [
            (unit[i] if i < len(unit) else 0, upart[i] if i < len(upart) else 0)
            for i in range(n)
        ],
        p,
    )


def r_poly_parts(a: RPoly, p: int) -> tuple[FpPoly, FpPoly]:
    """Unique decomposition g0(x) + u*g1(x)."""
    return fp_poly([c[0] for c in a], p), fp_poly([c[1] for c in a], p)


def r_poly_add(a: RPoly, b: RPoly, p: int) -> RPoly:
    n = max(len(a), len(b))

    def at(c, i):
        return c[i] if i < len(c) else (0, 0)

    return r_poly(
        [
            (at(a, i)[0] + at(b, i)[0], at(a, i)[1] + at(b, i)[1])
            for i in range(n)
        ],
        p,
    )


def r_poly_mul(a: RPoly, b: RPoly, p: int) -> RPoly:
    if not a or not b:
        return ()
    out = [[0, 0] for _ in range(len(a) + len(b) - 1)]
    for i, (a1, b1) in enumerate(a):
        for j, (a2, b2) in enumerate(b):
            out[i + j][0] += a1 * a2
            out[i + j][1] += a1 * b2 + b1 * a2
    return r_poly([(c[0], c[1]) for c in out], p)


def r_poly_divmod(a: RPoly, b: RPoly, p: int) -> tuple[RPoly, RPoly]:
    """Division in R[x], defined only for divisors with a unit leading coefficient."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_a, lead_b = b[-1]
    if lead_a == 0:
        raise ValueError(
            "division in R[x] requires a unit leading coefficient "
            f"(got {lead_a}+{lead_b}u)"
        )
    from zpzpu.ring import RElem

    inv = RElem(lead_a, lead_b, p).inverse()
    rem = [list(c) for c in a]
    quo = [[0, 0] for _ in range(max(len(a) - len(b) + 1, 0))]
    for shift in range(len(a) - len(b), -1, -1):
        ra, rb = rem[shift + len(b) - 1]
        c = RElem(ra, rb, p) * inv
        if not c.is_zero():
            quo[shift] = [c.a, c.b]
            for i, (ba, bb) in enumerate(b):
                rem[shift + i][0] = (rem[shift + i][0] - (c.a * ba)) % p
                rem[shift + i][1] = (rem[shift + i][1] - (c.a * bb + c.b * ba)) % p
    return r_poly([(c[0], c[1]) for c in quo], p), r_poly([(c[0], c[1]) for c in rem], p)


def reduce_r_poly_mod_xn_minus_1(a: RPoly, n: int, p: int) -> RPoly:
    out = [[0, 0] for _ in range(n)]
    for i, (ca, cb) in enumerate(a):
        out[i % n][0] = (out[i % n][0] + ca) % p
        out[i % n][1] = (out[i % n][1] + cb) % p
    return r_poly([(c[0], c[1]) for c in out], p)


def format_r_poly(a: RPoly, p: int) -> str:
    from zpzpu.ring import RElem, format_r_entry

    if not a:
        return "0"
    terms = []
    for i, (ca, cb) in enumerate(a):
        if ca == 0 and cb == 0:
            continue
        coef = format_r_entry(RElem(ca, cb, p))
        if "+" in coef:
            coef = f"({coef})"
        if i == 0:
            terms.append(coef)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            terms.append(xs if coef == "1" else f"{coef} {xs}")
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# Factoring x^n - 1 and enumerating its monic divisors
# ---------------------------------------------------------------------------

def _monic_polys(deg: int, p: int):
    for lower in itertools.product(range(p), repeat=deg):
        yield fp_poly(list(lower) + [1], p)


def is_irreducible(a: FpPoly, p: int) -> bool:
    """Trial division by all monic polynomials up to half the degree."""
    d = fp_poly_deg(a)
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for cand in _monic_polys(e, p):
            if fp_poly_divides(cand, a, p):
                return False
    return True


def factor_xn_minus_1(n: int, p: int) -> dict[FpPoly, int]:
    """Irreducible factorization of x^n - 1 over Z_p.

    Ramification is peeled off first: x^n - 1 = (x^m - 1)^(p^e) with
    n = m * p^e and gcd(m, p) = 1; the squarefree part is factored by trial
    division with monic irreducibles of increasing degree (desk scale).
    """
    e = 0
    m = n
    while m % p == 0:
        m //= p
        e += 1
    mult = p ** e
    factors: dict[FpPoly, int] = {}
    rem = xn_minus_1(m, p)
    deg = 1
    while fp_poly_deg(rem) > 0:
        for cand in _monic_polys(deg, p):
            if not is_irreducible(cand, p):
                continue
            while fp_poly_divides(cand, rem, p):
                factors[cand] = factors.get(cand, 0) + 1
                rem = fp_poly_divmod(rem, cand, p)[0]
        deg += 1
        if deg > n + 1:  # pragma: no cover
            raise AssertionError("factorization did not terminate")
    return {f: k * mult for f, k in factors.items()}


def divisors_of_xn_minus_1(n: int, p: int) -> tuple[FpPoly, ...]:
    """All monic divisors of x^n - 1 over Z_p, canonically sorted."""
    factors = sorted(factor_xn_minus_1(n, p).items())
    divisors = [fp_poly([1], p)]
    for f, k in factors:
        powers = [fp_poly([1], p)]
        for _ in range(k):
            powers.append(fp_poly_mul(powers[-1], f, p))
        divisors = [fp_poly_mul(d, pw, p) for d in divisors for pw in powers]
    return tuple(sorted(set(divisors)))


# ---------------------------------------------------------------------------
# Shift operator and cyclicity
# ---------------------------------------------------------------------------

def shift(w: MixedWord) -> MixedWord:
    """Simultaneous single right-rotation of the Z_p block and the R block."""
    fp = w.fp[-1:] + w.fp[:-1] if w.fp else w.fp
    r = w.r[-1:] + w.r[:-1] if w.r else w.r
    return MixedWord(w.shape, fp, r)


def shift_index(shape: Shape) -> int:
    """Least j with S^j the identity: lcm(alpha, beta) (1 for an empty block)."""
    a = shape.alpha or 1
    b = shape.beta or 1
    return math.lcm(a, b)


def is_cyclic(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Shift closure; checking generators suffices because the shift commutes
    with addition and with both scalar actions."""
    return all(code.contains(shift(g), budget) for g in code.generators)


def blockshift(vec: tuple[int, ...], alpha: int, beta: int) -> tuple[int, ...]:
    """Rotate the alpha block and each of the two beta blocks of a blockwise
    Gray image right by one position."""

    def rot(seg):
        return seg[-1:] + seg[:-1] if seg else seg

    a = vec[:alpha]
    q = vec[alpha:alpha + beta]
    s = vec[alpha + beta:]
    return rot(a) + rot(q) + rot(s)


# ---------------------------------------------------------------------------
# Word / polynomial correspondence
# ---------------------------------------------------------------------------

def word_from_polys(a: FpPoly, b: RPoly, shape: Shape) -> MixedWord:
    """Coefficients to coordinates; representatives must be reduced."""
    if len(a) > shape.alpha or len(b) > shape.beta:
        raise ValueError("polynomial degree exceeds block length; reduce first")
    fp = tuple(a[i] if i < len(a) else 0 for i in range(shape.alpha))
    r = tuple(b[j] if j < len(b) else (0, 0) for j in range(shape.beta))
    return MixedWord(shape, fp, r)


def polys_from_word(w: MixedWord) -> tuple[FpPoly, RPoly]:
    p = w.shape.p
    return fp_poly(w.fp, p), r_poly(w.r, p)


# ---------------------------------------------------------------------------
# Generator presentations of cyclic codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicGenerators:
    """Seeds (f, 0), (h1, g + u*pp) and (h2, u*q) of an additive cyclic code.

    All five named polynomials live in Z_p[x]; representatives are reduced
    mod x^alpha - 1 (for f, h1, h2) and mod x^beta - 1 (for g, pp, q).  The
    divisibility conditions evaluated by check_conditions are advisory
    validity flags, never construction guards.
    """

    shape: Shape
    f: FpPoly
    h1: FpPoly
    g: FpPoly
    pp: FpPoly
    q: FpPoly
    h2: FpPoly = ()

    def __post_init__(self) -> None:
        p, alpha, beta = self.shape.p, self.shape.alpha, self.shape.beta
        for name in ("f", "h1", "h2"):
            object.__setattr__(
                self, name, reduce_mod_xn_minus_1(getattr(self, name), alpha, p)
            )
        for name in ("g", "pp", "q"):
            object.__setattr__(
                self, name, reduce_mod_xn_minus_1(getattr(self, name), beta, p)
            )

    def seed_words(self) -> tuple[MixedWord, ...]:
        p = self.shape.p
        return (
            word_from_polys(self.f, (), self.shape),
            word_from_polys(self.h1, r_poly_from_parts(self.g, self.pp, p), self.shape),
            word_from_polys(self.h2, r_poly_from_parts((), self.q, p), self.shape),
        )


def cyclic_from_generators(
    gen: CyclicGenerators, budget: int = DEFAULT_BUDGET
) -> AdditiveCode:
    """Smallest shift-closed additive code containing the three seeds.

    The module closure of all shifts S^i(seed), i < lcm(alpha, beta), is
    automatically shift-closed because the shift commutes with the module
    operations.
    """
    j = shift_index(gen.shape)
    gens = []
    for seed in gen.seed_words():
        w = seed
        for _ in range(j):
            gens.append(w)
            w = shift(w)
    return AdditiveCode(gen.shape, gens)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the divisibility conditions on a generator tuple."""

    category: int  # 1: kernel only, 2: image only, 3: both
    results: tuple[tuple[str, str], ...]  # (condition, "holds"/"fails"/"unevaluable: ...")

    def holds_all(self) -> bool:
        return all(v == "holds" for _, v in self.results)


def check_conditions(gen: CyclicGenerators) -> ConditionReport:
    """Evaluate the divisibility conditions on the given representatives.

    Divisibility is tested on canonical representatives (degree < block
    length) with x^beta - 1 as an honorary divisor; the condition quoted with
    an undefined modulus r is reported as unevaluable rather than guessed.
    """
    shape = gen.shape
    p, beta = shape.p, shape.beta
    xb1 = xn_minus_1(beta, p)
    results: list[tuple[str, str]] = []

    results.append(
        ("q | g", "holds" if fp_poly_divides(gen.q, gen.g, p) else "fails")
    )
    g_divides = fp_poly_divides(gen.g, xb1, p)
    results.append(("g | x^beta-1", "holds" if g_divides else "fails"))

    if gen.g and g_divides:
        cofactor = fp_poly_divmod(xb1, gen.g, p)[0]
        prod = fp_poly_mul(gen.pp, cofactor, p)
        results.append(
            (
                "q | pp*(x^beta-1)/g",
                "holds" if fp_poly_divides(gen.q, prod, p) else "fails",
            )
        )
    else:
        results.append(("q | pp*(x^beta-1)/g", "unevaluable: g does not divide x^beta-1"))

    if not gen.pp and not gen.q:
        results.append(("f | h1*(x^beta-1)/lcm(pp,q)", "unevaluable: lcm(pp,q) is zero"))
    else:
        ell = (
            fp_poly_lcm(gen.pp, gen.q, p)
            if gen.pp and gen.q
            else fp_poly_monic(gen.pp or gen.q, p)
        )
        if fp_poly_divides(ell, xb1, p):
            cofactor = fp_poly_divmod(xb1, ell, p)[0]
            prod = fp_poly_mul(gen.h1, cofactor, p)
            results.append(
                (
                    "f | h1*(x^beta-1)/lcm(pp,q)",
                    "holds" if fp_poly_divides(gen.f, prod, p) else "fails",
                )
            )
        else:
            results.append(
                (
                    "f | h1*(x^beta-1)/lcm(pp,q)",
                    "unevaluable: lcm(pp,q) does not divide x^beta-1",
                )
            )

    results.append(
        ("(x^r-1) | pp*(x^beta-1)/g", "unevaluable: modulus r is undefined")
    )

    has_kernel = bool(gen.f)
    has_image = bool(gen.g or gen.pp or gen.q or gen.h1 or gen.h2)
    category = 1 if not has_image else (2 if not has_kernel else 3)
    return ConditionReport(category, tuple(results))


# ---------------------------------------------------------------------------
# Ideal presentation recovered from a codeword set
# ---------------------------------------------------------------------------

def psi_kernel(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> FpPoly:
    """Monic generator f of {a(x) : (a, 0) in C}, with x^alpha - 1 adjoined."""
    if not is_cyclic(code, budget):
        raise ValueError("ideal presentations apply to cyclic codes only")
    shape = code.shape
    p = shape.p
    acc = xn_minus_1(shape.alpha, p)
    for w in code.codewords(budget):
        if any(a or b for a, b in w.r):
            continue
        acc = fp_poly_gcd(acc, fp_poly(w.fp, p), p)
    return acc


@dataclass(frozen=True)
class ImagePresentation:
    """Recovered presentation of the projection of a cyclic code to its R block."""

    g: FpPoly
    pp: FpPoly
    q: FpPoly
    h1: FpPoly  # Z_p-side companion of the g + u*pp preimage
    h2: FpPoly  # Z_p-side companion of the u*q preimage


def psi_image(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> ImagePresentation:
    """Recover (g, pp, q) with Image = <g + u*pp, u*q> plus witnesses h1, h2.

    g generates the projection of the image mod u, q generates the torsion
    {s : u*s in Image}; pp is the u-part of the canonically smallest preimage
    of g, reduced mod q.  Witness polynomials h1/h2 record the Z_p-block
    companions of the chosen preimages so the code can be rebuilt.
    """
    if not is_cyclic(code, budget):
        raise ValueError("ideal presentations apply to cyclic codes only")
    shape = code.shape
    p, beta = shape.p, shape.beta
    xb1 = xn_minus_1(beta, p)
    words = code.codewords(budget)

    g = xb1
    for w in words:
        g = fp_poly_gcd(g, fp_poly([a for a, _ in w.r], p), p)

    q = xb1
    for w in words:
        unit = fp_poly([a for a, _ in w.r], p)
        if not unit:
            q = fp_poly_gcd(q, fp_poly([b for _, b in w.r], p), p)

    def reduced(a: FpPoly, modulus: FpPoly) -> FpPoly:
        if fp_poly_deg(modulus) < 1:
            return a if modulus else a
        return fp_poly_divmod(a, modulus, p)[1]

    g_red = reduce_mod_xn_minus_1(g, beta, p) if fp_poly_deg(g) >= beta else g
    pp: FpPoly = ()
    h1: FpPoly = ()
    for w in words:  # canonical order makes the witness deterministic
        unit = fp_poly([a for a, _ in w.r], p)
        if unit == g_red:
            pp = reduced(fp_poly([b for _, b in w.r], p), q if q else xb1)
            h1 = fp_poly(w.fp, p)
            break

    q_red = reduce_mod_xn_minus_1(q, beta, p) if fp_poly_deg(q) >= beta else q
    h2: FpPoly = ()
    for w in words:
        unit = fp_poly([a for a, _ in w.r], p)
        upart = fp_poly([b for _, b in w.r], p)
        if not unit and upart == q_red:
            h2 = fp_poly(w.fp, p)
            break

    return ImagePresentation(g=g_red, pp=pp, q=q_red, h1=h1, h2=h2)


def presentation_of(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> CyclicGenerators:
    """Full generator presentation recovered from the codeword set."""
    img = psi_image(code, budget)
    f = psi_kernel(code, budget)
    f_red = reduce_mod_xn_minus_1(f, code.shape.alpha, code.shape.p) if fp_poly_deg(f) >= code.shape.alpha else f
    return CyclicGenerators(
        shape=code.shape, f=f_red, h1=img.h1, g=img.g, pp=img.pp, q=img.q, h2=img.h2
    )


# ---------------------------------------------------------------------------
# Reports on cyclic codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrayShiftReport:
    """Closure of the Gray image under three candidate shifts.

    (i)  full single-coordinate rotation of the interleaved image,
    (ii) full single-coordinate rotation of the blockwise image,
    (iii) per-block rotation of the blockwise image (the shift the mixed
          cyclic shift actually induces; must always hold for cyclic codes).
    """

    rotation_interleaved: bool
    rotation_blockwise: bool
    block_rotation: bool


def gray_shift_analysis(
    code: AdditiveCode, budget: int = DEFAULT_BUDGET
) -> GrayShiftReport:
    from zpzpu.gray import phi

    if not is_cyclic(code, budget):
        raise ValueError("gray shift analysis applies to cyclic codes only")
    shape = code.shape
    alpha, beta = shape.alpha, shape.beta
    words = code.codewords(budget)

    inter = frozenset(phi(w, "interleaved") for w in words)
    block = frozenset(phi(w, "blockwise") for w in words)

    def rot(vec):
        return vec[-1:] + vec[:-1] if vec else vec

    return GrayShiftReport(
        rotation_interleaved=all(rot(v) in inter for v in inter),
        rotation_blockwise=all(rot(v) in block for v in block),
        block_rotation=all(blockshift(v, alpha, beta) in block for v in block),
    )


def dual_cyclicity_check(code: AdditiveCode, budget: int = DEFAULT_BUDGET) -> bool:
    """True when the dual of a cyclic code is itself shift-closed.

    Membership of a shifted dual generator in the dual reduces to inner
    products with the primal generators, so no dual enumeration is needed.
    """
    from zpzpu.code import dual_nullspace
    from zpzpu.words import inner_product

    if not is_cyclic(code, budget):
        raise ValueError("dual cyclicity check applies to cyclic codes only")
    dual = dual_nullspace(code)
    return all(
        inner_product(g, shift(d)).is_zero()
        for d in dual.generators
        for g in code.generators
    )
