"""Exact arithmetic in the ring of integers of Q(sqrt(-D)).

Elements are stored over the ring basis {1, delta} where delta is
sqrt(-D) when -D != 1 (mod 4) and (1 + sqrt(-D))/2 otherwise.  Real and
imaginary parts are returned as exact rationals; the imaginary part is
always reported as a coefficient of sqrt(D).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction
RatLike = Union[int, Fraction]


class FieldError(ValueError):
    """Raised for an invalid D (non-positive or not squarefree)."""


class FieldCase(enum.Enum):
    NON_RESIDUE = "NonResidue"  # -D != 1 mod 4, delta = sqrt(-D)
    RESIDUE = "Residue"  # -D == 1 mod 4, delta = (1 + sqrt(-D))/2


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        if n % k == 0:
            n //= k
        k += 1
    return True


@dataclass(frozen=True)
class FieldDesc:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise FieldError(f"D must be a positive integer, got {self.d!r}")
        if not is_squarefree(self.d):
            raise FieldError(f"D={self.d} is not squarefree")

    @property
    def case(self) -> FieldCase:
        return FieldCase.RESIDUE if (-self.d) % 4 == 1 else FieldCase.NON_RESIDUE

    @property
    def residue(self) -> bool:
        return self.case is FieldCase.RESIDUE

    def __str__(self):
        return f"Q(sqrt(-{self.d}))"


@dataclass(frozen=True)
class QuadElem:
    """The element p + q*delta."""

    p: int
    q: int = 0

    def __add__(self, other: QuadElem) -> QuadElem:
        return QuadElem(self.p + other.p, self.q + other.q)

    def __sub__(self, other: QuadElem) -> QuadElem:
        return QuadElem(self.p - other.p, self.q - other.q)

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.p, -self.q)

    def scale(self, k: int) -> QuadElem:
        return QuadElem(k * self.p, k * self.q)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0


def elem_mul(x: QuadElem, y: QuadElem, k: FieldDesc) -> QuadElem:
    pp = x.p * y.p
    pq = x.p * y.q + x.q * y.p
    qq = x.q * y.q
    if k.residue:
        # delta^2 = delta - (1 + D)/4
        return QuadElem(pp - qq * ((1 + k.d) // 4), pq + qq)
    return QuadElem(pp - qq * k.d, pq)


def mul_delta(x: QuadElem, k: FieldDesc) -> QuadElem:
    return elem_mul(x, QuadElem(0, 1), k)


def elem_norm(x: QuadElem, k: FieldDesc) -> int:
    if k.residue:
        return x.p * x.p + x.p * x.q + x.q * x.q * ((1 + k.d) // 4)
    return x.p * x.p + x.q * x.q * k.d


def re(x: QuadElem, k: FieldDesc) -> Fraction:
    if k.residue:
        return Fraction(2 * x.p + x.q, 2)
    return Fraction(x.p)


def im_coeff(x: QuadElem, k: FieldDesc) -> Fraction:
    """Rational c with Im(x) = c * sqrt(D)."""
    if k.residue:
        return Fraction(x.q, 2)
    return Fraction(x.q)


def embed(x: QuadElem, k: FieldDesc) -> tuple[float, float]:
    """Coordinates (Re x, -Im x) of the ideal-lattice embedding, in floating point."""
    return float(re(x, k)), -float(im_coeff(x, k)) * math.sqrt(k.d)


def to_complex(x: QuadElem, k: FieldDesc) -> complex:
    return complex(float(re(x, k)), float(im_coeff(x, k)) * math.sqrt(k.d))


# -- quadratic surds ---------------------------------------------------------


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class IncomparableSurds(ArithmeticError):
    pass


@dataclass(frozen=True)
class SurdValue:
    """The real number p + q*sqrt(r) with rational p, q and r >= 0."""

    p: Fraction
    q: Fraction = Fraction(0)
    r: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r < 0:
            raise ValueError("negative radicand")

    @classmethod
    def rational(cls, value: RatLike) -> SurdValue:
        return cls(Fraction(value))

    def is_rational(self) -> bool:
        if self.q == 0 or self.r == 0:
            return True
        n, d = self.r.numerator, self.r.denominator
        return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d

    def __add__(self, other: RatLike) -> SurdValue:
        return SurdValue(self.p + other, self.q, self.r)

    def __sub__(self, other: RatLike) -> SurdValue:
        return SurdValue(self.p - other, self.q, self.r)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(float(self.r))

    def floor(self) -> int:
        n = math.floor(float(self))
        while surd_cmp(self, n) < 0:
            n -= 1
        while surd_cmp(self, n + 1) >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        n = math.ceil(float(self))
        while surd_cmp(self, n) > 0:
            n += 1
        while surd_cmp(self, n - 1) <= 0:
            n -= 1
        return n


def surd_sign(s: SurdValue) -> int:
    """Exact sign of p + q*sqrt(r)."""
    sp, sq = _sign(s.p), _sign(s.q) if s.r != 0 else 0
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: compare p^2 against q^2 r
    lhs, rhs = s.p * s.p, s.q * s.q * s.r
    if lhs > rhs:
        return sp
    if lhs < rhs:
        return sq
    return 0


def surd_cmp(s: SurdValue, n: RatLike) -> int:
    """-1, 0 or 1 as s is less than, equal to or greater than the rational n."""
    return surd_sign(SurdValue(s.p - Fraction(n), s.q, s.r))


def surd_compare(s1: SurdValue, s2: SurdValue) -> int:
    """Order two surds sharing a radicand (or where either is rational)."""
    if s2.is_rational():
        return surd_cmp(s1, s2.p + s2.q * _rational_sqrt(s2.r))
    if s1.is_rational():
        return -surd_cmp(s2, s1.p + s1.q * _rational_sqrt(s1.r))
    if s1.r != s2.r:
        raise IncomparableSurds(f"{s1} vs {s2}")
    return surd_sign(SurdValue(s1.p - s2.p, s1.q - s2.q, s1.r))


def _rational_sqrt(r: Fraction) -> Fraction:
    return Fraction(math.isqrt(r.numerator), math.isqrt(r.denominator))


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
