"""Good-basis criterion, twist parameter and twisted angle for a basis {u, v}.

Every imaginary part below is a rational coefficient of sqrt(D); since
sqrt(D) > 0 the signs of F = F1*F2 and of the stored coefficients agree,
so F itself is never materialised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldDesc, QuadElem, elem_mul, embed, im_coeff, re


class DegenerateBasis(ArithmeticError):
    pass


class NotTwistable(ArithmeticError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


DENOM_ZERO = "DenomZero"
NON_POSITIVE = "NonPositive"


@dataclass(frozen=True)
class BasisPair:
    u: QuadElem
    v: QuadElem
    field: FieldDesc

    def swapped(self) -> BasisPair:
        return BasisPair(self.v, self.u, self.field)

    def im2(self) -> tuple[Fraction, Fraction, Fraction]:
        """sqrt(D)-coefficients of Im(u^2), Im(v^2), Im(uv)."""
        k = self.field
        return (
            im_coeff(elem_mul(self.u, self.u, k), k),
            im_coeff(elem_mul(self.v, self.v, k), k),
            im_coeff(elem_mul(self.u, self.v, k), k),
        )


def f1_coeff(B: BasisPair) -> Fraction:
    iu, iv, iuv = B.im2()
    return -(iu + iv + iuv) / 2


def f2_coeff(B: BasisPair) -> Fraction:
    iu, iv, iuv = B.im2()
    return -(iu + iv - iuv) / 2


def nondegeneracy(B: BasisPair) -> Fraction:
    """Re(u)Im(v) + Re(v)Im(u) as a sqrt(D)-coefficient; this is Im(uv)."""
    k = B.field
    return re(B.u, k) * im_coeff(B.v, k) + re(B.v, k) * im_coeff(B.u, k)


def is_good(B: BasisPair) -> bool:
    return f1_coeff(B) * f2_coeff(B) <= 0 and nondegeneracy(B) != 0


def cos_theta(B: BasisPair) -> Fraction:
    """Cosine of the angle of the twisted basis."""
    iu, iv, iuv = B.im2()
    if iuv == 0:
        raise DegenerateBasis("Im(uv) = 0")
    return (iu + iv) / (2 * iuv)


def _beta_parts(B: BasisPair) -> tuple[Fraction, Fraction]:
    k = B.field
    num = (im_coeff(B.v, k) ** 2 - im_coeff(B.u, k) ** 2) * k.d
    den = re(B.u, k) ** 2 - re(B.v, k) ** 2
    return num, den


def twist_beta(B: BasisPair) -> Fraction:
    """beta with alpha = beta**(1/4) equalising the twisted norms of u and v."""
    num, den = _beta_parts(B)
    if den == 0:
        raise NotTwistable(DENOM_ZERO)
    beta = num / den
    if beta <= 0:
        raise NotTwistable(NON_POSITIVE)
    return beta


def twist_alpha(B: BasisPair) -> float:
    return float(twist_beta(B)) ** 0.25


def twist_embed(B: BasisPair) -> tuple[tuple[float, float], tuple[float, float]]:
    alpha = twist_alpha(B)
    (ux, uy), (vx, vy) = embed(B.u, B.field), embed(B.v, B.field)
    return (alpha * ux, uy / alpha), (alpha * vx, vy / alpha)


def tau_normal_form(alpha: float, x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    """x' with {(1,0), x'} similar to {T_alpha x, T_alpha y}, x'[1] > 0, |x'| >= 1."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    z = _tau(alpha, x, y)
    if math.hypot(*z) < 1:
        z = _tau(alpha, y, x)
    return z


def _tau(alpha, x, y):
    a, c = x
    b, d = y
    det = a * d - b * c
    if det == 0:
        raise DegenerateBasis("ad - bc = 0")
    a4 = alpha ** 4
    s = 1.0 / (a4 * a * a + c * c)
    z = ((a * b * a4 + c * d) * s, alpha * alpha * det * s)
    return z if det > 0 else (-z[0], -z[1])
