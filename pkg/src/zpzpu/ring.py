"""Exact arithmetic in Z_p and in the chain ring R = Z_p + uZ_p with u^2 = 0.

R is a local ring: a + ub is a unit exactly when a != 0, and the non-units
form the maximal ideal uZ_p.  The coordinate Gray map psi sends a + ub to
the pair (b, a + b) in Z_p^2.

All values are immutable and fully reduced mod p at construction, so that
set-based exhaustive checks can compare canonical representatives directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class NotAUnit(ArithmeticError):
    """Raised when inverting a non-unit of R (an element with zero unit part)."""


def is_prime(n: int) -> bool:
    """Trial-division primality test, sufficient for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeCtx:
    """A prime modulus p >= 2."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"modulus {self.p!r} is not prime")


@dataclass(frozen=True, order=True)
class FpElem:
    """A residue in Z_p, stored fully reduced."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FpElem") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value - other.value) % self.p, self.p)

    def __neg__(self) -> "FpElem":
        return FpElem(-self.value % self.p, self.p)

    def __mul__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value * other.value) % self.p, self.p)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise NotAUnit("0 has no inverse in Z_p")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __repr__(self) -> str:
        return f"FpElem({self.value} mod {self.p})"


@dataclass(frozen=True, order=True)
class RElem:
    """An element a + u*b of R = Z_p + uZ_p, with u^2 = 0."""

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if not (0 <= self.a < self.p and 0 <= self.b < self.p):
            object.__setattr__(self, "a", self.a % self.p)
            object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def zero(cls, p: int) -> "RElem":
        return cls(0, 0, p)

    @classmethod
    def one(cls, p: int) -> "RElem":
        return cls(1, 0, p)

    @classmethod
    def u(cls, p: int) -> "RElem":
        return cls(0, 1, p)

    def _check(self, other: "RElem") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "RElem") -> "RElem":
        self._check(other)
        return RElem((self.a + other.a) % self.p, (self.b + other.b) % self.p, self.p)

    def __sub__(self, other: "RElem") -> "RElem":
        self._check(other)
        return RElem((self.a - other.a) % self.p, (self.b - other.b) % self.p, self.p)

    def __neg__(self) -> "RElem":
        return RElem(-self.a % self.p, -self.b % self.p, self.p)

    def __mul__(self, other: "RElem") -> "RElem":
        # (a1 + u b1)(a2 + u b2) = a1 a2 + u(a1 b2 + a2 b1); the u^2 term vanishes.
        self._check(other)
        p = self.p
        return RElem(
            (self.a * other.a) % p,
            (self.a * other.b + self.b * other.a) % p,
            p,
        )

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.a != 0

    def is_u_multiple(self) -> bool:
        return self.a == 0

    def inverse(self) -> "RElem":
        # R is local: for a != 0, (a + ub)^-1 = a^-1 - u * b * a^-2.
        if self.a == 0:
            raise NotAUnit(f"{self} is not a unit (zero unit part)")
        p = self.p
        ai = pow(self.a, -1, p)
        return RElem(ai, (-self.b * ai * ai) % p, p)

    def psi(self) -> tuple[FpElem, FpElem]:
        """Coordinate Gray map: a + ub maps to (b, a + b)."""
        return (FpElem(self.b, self.p), FpElem((self.a + self.b) % self.p, self.p))

    def __repr__(self) -> str:
        return f"RElem({format_r_entry(self)} mod {self.p})"


def r_add(x: RElem, y: RElem) -> RElem:
    return x + y


def r_mul(x: RElem, y: RElem) -> RElem:
    return x * y


def r_inv(x: RElem) -> RElem:
    return x.inverse()


def psi(x: RElem) -> tuple[FpElem, FpElem]:
    return x.psi()


_ENTRY_RE = re.compile(
    r"""^\s*
        (?:
            (?P<a>\d+)\s*\+\s*(?P<bu>\d*)\s*u       # a + bu (b may be implicit 1)
          | (?P<b>\d*)\s*u                          # bu or bare u
          | (?P<pure>\d+)                           # a
        )
        \s*$""",
    re.VERBOSE,
)


def parse_r_entry(text: str, p: int) -> RElem:
    """Parse an R entry: INT | INT "u" | INT "+" INT "u" (e.g. "0", "2u", "1+2u").

    Coefficients must already be reduced (< p); out-of-range values are rejected
    so that spec files carry canonical representatives only.
    """
    m = _ENTRY_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse ring entry {text!r}")
    if m.group("pure") is not None:
        a, b = int(m.group("pure")), 0
    elif m.group("a") is not None:
        a = int(m.group("a"))
        b = int(m.group("bu")) if m.group("bu") else 1
    else:
        a = 0
        b = int(m.group("b")) if m.group("b") else 1
    if a >= p or b >= p:
        raise ValueError(f"coefficient >= p in entry {text!r} (p = {p})")
    return RElem(a, b, p)


def format_r_entry(x: RElem) -> str:
    """Canonical printed form: "a", "bu" (with "u" for 1u), or "a+bu"."""
    if x.b == 0:
        return str(x.a)
    if x.a == 0:
        return "u" if x.b == 1 else f"{x.b}u"
    return f"{x.a}+{x.b}u"
