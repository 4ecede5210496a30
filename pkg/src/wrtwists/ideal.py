"""Canonical Z-basis {t, y + g*delta} of an integral ideal."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .field import FieldDesc, QuadElem, elem_norm, mul_delta


class ZeroIdeal(ValueError):
    pass


class InconsistentIdeal(ArithmeticError):
    """The data does not describe an O_K-ideal in canonical form."""


@dataclass(frozen=True)
class IdealTriple:
    field: FieldDesc
    t: int
    y: int
    g: int

    def __post_init__(self):
        check_canonical(self.field, self.t, self.y, self.g)

    @property
    def u(self) -> QuadElem:
        return QuadElem(self.t, 0)

    @property
    def v(self) -> QuadElem:
        return QuadElem(self.y, self.g)

    @property
    def re_v(self) -> Fraction:
        """Real part of y + g*delta."""
        if self.field.residue:
            return Fraction(2 * self.y + self.g, 2)
        return Fraction(self.y)

    @property
    def im_v(self) -> Fraction:
        """sqrt(D)-coefficient of Im(y + g*delta)."""
        return Fraction(self.g, 2) if self.field.residue else Fraction(self.g)

    def elem_at(self, a: int, c: int) -> QuadElem:
        return elem_at(self, a, c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.t, self.y, self.g)


def check_canonical(k: FieldDesc, t: int, y: int, g: int) -> None:
    if t <= 0 or g <= 0:
        raise InconsistentIdeal(f"need t > 0 and g > 0, got t={t}, g={g}")
    if not 0 <= y < t:
        raise InconsistentIdeal(f"need 0 <= y < t, got y={y}, t={t}")
    if t % g or y % g:
        raise InconsistentIdeal(f"g={g} must divide t={t} and y={y}")
    if g > t:
        raise InconsistentIdeal(f"need g <= t, got g={g}, t={t}")
    if elem_norm(QuadElem(y, g), k) % (t * g):
        raise InconsistentIdeal(f"t*g={t * g} does not divide N(y + g*delta)")


def canonical_basis(gens: Iterable[QuadElem], k: FieldDesc) -> IdealTriple:
    """Hermite normal form of the Z-module spanned by the gens and delta*gens."""
    vectors = []
    for x in gens:
        vectors.append(x)
        vectors.append(mul_delta(x, k))
    if not vectors or all(x.is_zero() for x in vectors):
        raise ZeroIdeal("the zero ideal has no canonical basis")

    t = 0
    w = None  # current vector with nonzero delta-coordinate, as (p, q)
    for x in vectors:
        p, q = x.p, x.q
        if q == 0:
            t = gcd(t, p)
            continue
        if w is None:
            w = (p, q) if q > 0 else (-p, -q)
            continue
        wp, wq = w
        G, s, r = xgcd(wq, q)
        new_w = (s * wp + r * p, G)
        # the complementary combination has zero delta-coordinate
        t = gcd(t, (q // G) * wp - (wq // G) * p)
        w = new_w
    if w is None or t == 0:
        raise InconsistentIdeal("generators do not span a rank-2 lattice")
    y, g = w[0] % t, w[1]
    return IdealTriple(k, t, y, g)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, r) with s*a + r*b = g = gcd(a, b) >= 0."""
    s0, s1, r0, r1 = 1, 0, 0, 1
    while b:
        qt, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - qt * s1
        r0, r1 = r1, r0 - qt * r1
    if a < 0:
        return -a, -s0, -r0
    return a, s0, r0


def vol_sq(I: IdealTriple) -> Fraction:
    """Squared covolume of the ideal lattice."""
    tg2 = (I.t * I.g) ** 2 * I.field.d
    return Fraction(tg2, 4) if I.field.residue else Fraction(tg2)


def elem_at(I: IdealTriple, a: int, c: int) -> QuadElem:
    return QuadElem(a * I.t + c * I.y, c * I.g)


def ring_of_integers(k: FieldDesc) -> IdealTriple:
    return IdealTriple(k, 1, 0, 1)
