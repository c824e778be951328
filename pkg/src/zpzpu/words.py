"""Words of the ambient space Z_p^alpha x R^beta and its module structure.

Internally a word stores plain reduced integers: the Z_p block as a tuple of
ints and the R block as a tuple of (a, b) pairs meaning a + ub.  The three
scalar multiplication rules are:

  (1) coordinatewise product of two words (Z_p coords in Z_p, R coords in R),
  (2) an R scalar c = r + qu scales Z_p coords by r only and R coords by c,
  (3) a Z_p scalar scales every coordinate (rule (2) with q = 0).

The mixed inner product is valued in R:
  v . w = u * (sum over Z_p coords) + (sum over R coords, computed in R).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from zpzpu.ring import FpElem, PrimeCtx, RElem, format_r_entry, parse_r_entry


@dataclass(frozen=True)
class Shape:
    """Block profile (p; alpha, beta) of the ambient space."""

    p: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        PrimeCtx(self.p)
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta < 1:
            raise ValueError(f"invalid shape alpha={self.alpha}, beta={self.beta}")

    @property
    def n(self) -> int:
        """Gray-image length alpha + 2*beta."""
        return self.alpha + 2 * self.beta

    @property
    def ncoords(self) -> int:
        return self.alpha + self.beta

    @property
    def ambient_size(self) -> int:
        return self.p ** self.n


@dataclass(frozen=True)
class MixedWord:
    """A word (a_0..a_{alpha-1} | b_0..b_{beta-1}) with b_j in R."""

    shape: Shape
    fp: tuple[int, ...]
    r: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.fp) != self.shape.alpha or len(self.r) != self.shape.beta:
            raise ValueError("component counts do not match shape")

    def fp_elems(self) -> tuple[FpElem, ...]:
        return tuple(FpElem(v, self.shape.p) for v in self.fp)

    def r_elems(self) -> tuple[RElem, ...]:
        return tuple(RElem(a, b, self.shape.p) for a, b in self.r)

    def is_zero(self) -> bool:
        return not any(self.fp) and not any(a or b for a, b in self.r)

    def key(self) -> tuple:
        """Canonical sort key."""
        return (self.fp, self.r)

    def __repr__(self) -> str:
        return f"MixedWord({format_word(self)!r})"


def _check_shapes(x: MixedWord, y: MixedWord) -> None:
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")


def zero_word(shape: Shape) -> MixedWord:
    return MixedWord(shape, (0,) * shape.alpha, ((0, 0),) * shape.beta)


def word_add(x: MixedWord, y: MixedWord) -> MixedWord:
    _check_shapes(x, y)
    p = x.shape.p
    return MixedWord(
        x.shape,
        tuple((a + b) % p for a, b in zip(x.fp, y.fp)),
        tuple(((a1 + a2) % p, (b1 + b2) % p) for (a1, b1), (a2, b2) in zip(x.r, y.r)),
    )


def word_neg(x: MixedWord) -> MixedWord:
    p = x.shape.p
    return MixedWord(
        x.shape,
        tuple(-a % p for a in x.fp),
        tuple((-a % p, -b % p) for a, b in x.r),
    )


def word_sub(x: MixedWord, y: MixedWord) -> MixedWord:
    return word_add(x, word_neg(y))


def scalar_mul_r(c: RElem, x: MixedWord) -> MixedWord:
    """Rule (2): c = r + qu scales the Z_p block by r and the R block by c."""
    p = x.shape.p
    if c.p != p:
        raise ValueError(f"modulus mismatch: {c.p} vs {p}")
    r, q = c.a, c.b
    return MixedWord(
        x.shape,
        tuple((r * a) % p for a in x.fp),
        tuple(((r * a) % p, (r * b + q * a) % p) for a, b in x.r),
    )


def scalar_mul_fp(c: int | FpElem, x: MixedWord) -> MixedWord:
    """Rule (3): a Z_p scalar acts on every coordinate (Z_p embeds in R)."""
    p = x.shape.p
    v = c.value if isinstance(c, FpElem) else c % p
    return scalar_mul_r(RElem(v, 0, p), x)


def hadamard(x: MixedWord, y: MixedWord) -> MixedWord:
    """Rule (1): coordinatewise product."""
    _check_shapes(x, y)
    p = x.shape.p
    return MixedWord(
        x.shape,
        tuple((a * b) % p for a, b in zip(x.fp, y.fp)),
        tuple(
            ((a1 * a2) % p, (a1 * b2 + b1 * a2) % p)
            for (a1, b1), (a2, b2) in zip(x.r, y.r)
        ),
    )


def inner_product(v: MixedWord, w: MixedWord) -> RElem:
    """Mixed inner product u*(sum of Z_p products) + (sum of R products), in R.

    Empty blocks contribute the empty sum 0, so pure-Z_p (beta = 0) and
    pure-R (alpha = 0) shapes degenerate cleanly.
    """
    _check_shapes(v, w)
    p = v.shape.p
    zp_sum = sum(a * b for a, b in zip(v.fp, w.fp)) % p
    unit = 0
    upart = zp_sum
    for (a1, b1), (a2, b2) in zip(v.r, w.r):
        unit += a1 * a2
        upart += a1 * b2 + b1 * a2
    return RElem(unit % p, upart % p, p)


def iter_ambient(shape: Shape) -> Iterator[MixedWord]:
    """All p^(alpha+2beta) ambient words in canonical (lexicographic) order."""
    p = shape.p
    for fp in itertools.product(range(p), repeat=shape.alpha):
        for flat in itertools.product(range(p), repeat=2 * shape.beta):
            r = tuple(
                (flat[2 * j], flat[2 * j + 1]) for j in range(shape.beta)
            )
            yield MixedWord(shape, fp, r)


def parse_word(text: str, shape: Shape) -> MixedWord:
    """Parse "a0 a1 | e0 e1" with R entries in the ring entry grammar."""
    if "|" not in text:
        raise ValueError(f"word {text!r} is missing the '|' block separator")
    left, _, right = text.partition("|")
    fp_tokens = left.split()
    r_tokens = right.split()
    if len(fp_tokens) != shape.alpha:
        raise ValueError(
            f"expected {shape.alpha} Z_p entries, found {len(fp_tokens)}"
        )
    if len(r_tokens) != shape.beta:
        raise ValueError(f"expected {shape.beta} R entries, found {len(r_tokens)}")
    p = shape.p
    fp = []
    for tok in fp_tokens:
        if not tok.isdigit():
            raise ValueError(f"cannot parse Z_p entry {tok!r}")
        v = int(tok)
        if v >= p:
            raise ValueError(f"coefficient >= p in entry {tok!r} (p = {p})")
        fp.append(v)
    r = [parse_r_entry(tok, p) for tok in r_tokens]
    return MixedWord(shape, tuple(fp), tuple((e.a, e.b) for e in r))


def format_word(w: MixedWord) -> str:
    p = w.shape.p
    left = " ".join(str(a) for a in w.fp)
    right = " ".join(format_r_entry(RElem(a, b, p)) for a, b in w.r)
    if left and right:
        return f"{left} | {right}"
    if left:
        return f"{left} |"
    return f"| {right}"
