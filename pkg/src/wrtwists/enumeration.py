"""Enumeration of all good tuples (a, c, b, d) of an ideal.

A tuple stands for the ordered basis x = a*t + c*v, y = b*t + d*v of I,
v = y_I + g*delta being the second canonical basis vector.  The search
follows the two published algorithms (one per residue class of -D mod 4):
list every x whose squared Im(x^2) is at most vol^2, then solve for the
partners y in the closed-form intervals, deciding integer membership of
irrational endpoints exactly.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .criteria import BasisPair, is_good, nondegeneracy
from .field import SurdValue
from .ideal import IdealTriple, xgcd

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)
THREE_QUARTERS = Fraction(3, 4)


class GoodTuple(NamedTuple):
    a: int
    c: int
    b: int
    d: int


class Branch(enum.Enum):
    C0 = "C0"  # x = t
    A0 = "A0"  # x = v
    KERNEL = "Kernel"  # Re(x) = 0
    GENERAL = "General"


@dataclass(frozen=True)
class ExtendablePair:
    a: int
    c: int
    branch: Branch


class InvariantViolation(AssertionError):
    pass


def integers_in(lo: SurdValue, hi: SurdValue, closed: bool = True) -> list[int]:
    if closed:
        first, last = lo.ceil(), hi.floor()
    else:
        first, last = lo.floor() + 1, hi.ceil() - 1
    return list(range(first, last + 1))


def re_at(I: IdealTriple, a: int, c: int) -> Fraction:
    """Re(a*t + c*v)."""
    return a * I.t + c * I.re_v


def basis_of(I: IdealTriple, t4) -> BasisPair:
    a, c, b, d = t4
    return BasisPair(I.elem_at(a, c), I.elem_at(b, d), I.field)


def normalize(I: IdealTriple, t4) -> GoodTuple:
    """Canonical sign representative of (+-x, +-y).

    x gets a > 0, or a == 0 and c > 0.  The sign of y then fixes the
    determinant: ad - bc = -1 when a == 0 or x is purely imaginary, and
    +1 otherwise.
    """
    a, c, b, d = t4
    if a < 0 or (a == 0 and c < 0):
        a, c = -a, -c
    det = a * d - b * c
    if det not in (1, -1):
        raise InvariantViolation(f"{t4} is not unimodular")
    want = -1 if a == 0 or re_at(I, a, c) == 0 else 1
    if det != want:
        b, d = -b, -d
    return GoodTuple(a, c, b, d)


def swap(t4) -> tuple[int, int, int, int]:
    a, c, b, d = t4
    return (b, d, a, c)


def kernel_pair(I: IdealTriple) -> tuple[int, int]:
    """Primitive (a, c) with Re(a*t + c*v) = 0, normalised."""
    n, m = I.re_v.numerator, I.re_v.denominator
    G = gcd(n, I.t * m)
    a, c = n // G, -(I.t * m) // G
    if a < 0 or (a == 0 and c < 0):
        a, c = -a, -c
    return a, c


def _a_max(I: IdealTriple) -> Fraction:
    # (y+1)/2, resp. (2y+g+1)/2
    return I.re_v + HALF


def extendable_pairs(I: IdealTriple) -> list[ExtendablePair]:
    """Every normalised primitive (a, c) with Im(x^2)^2 <= vol^2."""
    t, re_v = I.t, I.re_v
    pairs = [ExtendablePair(1, 0, Branch.C0)]
    ka, kc = kernel_pair(I)
    if re_v != 0 and 2 * re_v <= t:
        pairs.append(ExtendablePair(0, 1, Branch.A0))
    examined = len(pairs)
    if re_v > 0:
        alpha = Fraction(t) / (2 * re_v)
        a_max = int(_a_max(I))
        for a in range(1, a_max + 1):
            examined += 1
            aa = a * a * alpha * alpha
            lo = SurdValue(-a * alpha, -1, aa + alpha)
            hi = SurdValue(-a * alpha, -1, aa - alpha) if aa >= alpha else SurdValue.rational(-1)
            for c in integers_in(lo, hi):
                if c == 0 or gcd(a, c) != 1:
                    continue
                r = re_at(I, a, c)
                if r == 0:
                    continue  # kernel pair, handled below
                if abs(2 * c * r) > t:
                    raise InvariantViolation(f"({a},{c}) outside the extendability bound")
                pairs.append(ExtendablePair(a, c, Branch.GENERAL))
    pairs.append(ExtendablePair(ka, kc, Branch.KERNEL))
    loops_bound = 2 * re_v + 2  # y + 2, resp. 2y + g + 2
    if examined > loops_bound:
        log.warning("examined %d candidates, more than the expected %s", examined, loops_bound)
    return pairs


def _c0_candidates(I: IdealTriple) -> list[GoodTuple]:
    beta1 = -HALF - I.re_v / I.t
    return [GoodTuple(1, 0, b, 1) for b in integers_in(SurdValue(beta1), SurdValue(beta1 + 1))]


def _a0_candidates(I: IdealTriple) -> list[GoodTuple]:
    alpha = Fraction(I.t) / (2 * I.re_v)
    rad = alpha * alpha - THREE_QUARTERS
    ds = set()
    for sign in (-1, 1):
        lo = SurdValue(-HALF - alpha, sign, rad)
        ds.update(integers_in(lo, lo + 1))
    return [GoodTuple(0, 1, 1, d) for d in sorted(ds)]


def _kernel_candidates(I: IdealTriple, a: int, c: int) -> list[GoodTuple]:
    # work in the swapped basis {v, t} with x replaced by -x
    a2, c2 = -c, -a
    m = abs(a2)
    out = []
    for d in integers_in(SurdValue(Fraction(-m, 2)), SurdValue(Fraction(m, 2))):
        if (1 + c2 * d) % a2 == 0:
            b = (1 + c2 * d) // a2
            out.append(GoodTuple(a, c, -b, -d))
    return out


def _general_candidates(I: IdealTriple, a: int, c: int) -> list[GoodTuple]:
    beta = Fraction(I.t) / (2 * c * re_at(I, a, c))
    centre = Fraction(-a * c - 2, 2 * c) + a * beta
    rad = beta * beta - THREE_QUARTERS
    bs = set()
    for sign in (-a, a):
        lo = SurdValue(centre, sign, rad)
        bs.update(integers_in(lo, lo + a))
    return [GoodTuple(a, c, b, (1 + b * c) // a) for b in sorted(bs) if (1 + b * c) % a == 0]


def extend_to_good(I: IdealTriple, p: ExtendablePair) -> list[GoodTuple]:
    """Good tuples with first vector x = a*t + c*v, via the closed-form windows."""
    if p.branch is Branch.C0:
        cands = _c0_candidates(I)
    elif p.branch is Branch.A0:
        cands = _a0_candidates(I)
    elif p.branch is Branch.KERNEL:
        cands = _kernel_candidates(I, p.a, p.c)
    else:
        cands = _general_candidates(I, p.a, p.c)
    out = []
    for t4 in cands:
        B = basis_of(I, t4)
        # the closed windows are exact, so anything failing here is a bug
        if nondegeneracy(B) == 0:
            continue
        if not is_good(B):
            raise InvariantViolation(f"{t4} from branch {p.branch.value} is not good")
        out.append(normalize(I, t4))
    return sorted(set(out))


def all_good_tuples(I: IdealTriple) -> list[GoodTuple]:
    """Every good ordered basis of I, one sign representative each, sorted."""
    found = set()
    for p in extendable_pairs(I):
        found.update(extend_to_good(I, p))
    # a good {x, y} only guarantees one of x, y inside the enumerated range
    found.update(normalize(I, swap(t4)) for t4 in list(found))
    out = sorted(found)
    for t4 in out:
        check_good_tuple(I, t4)
    if not out:
        raise InvariantViolation("no good tuple found")
    return out


def check_good_tuple(I: IdealTriple, t4) -> None:
    a, c, b, d = t4
    if a * d - b * c not in (1, -1):
        raise InvariantViolation(f"{t4}: ad - bc = {a * d - b * c}")
    if gcd(a, c) != 1:
        raise InvariantViolation(f"{t4}: gcd(a, c) != 1")
    if not is_good(basis_of(I, t4)):
        raise InvariantViolation(f"{t4} is not a good basis")


def extensions_by_quadratic(I: IdealTriple, a: int, c: int) -> list[GoodTuple]:
    """All good partners of x = (a, c), from the quadratic in the shift k.

    Partners are +-(y0 + k*x) for one fixed y0 with det(x, y0) = 1.  With
    A, B0, C0 the sqrt(D)-coefficients of Im(x^2), Im(y0^2), Im(x*y0),
    -2*F1 = A k^2 + (2 C0 + A) k + (A + B0 + C0) =: f(k) and F2(k) = F1(k-1),
    so the basis is good iff f(k) f(k-1) <= 0 and C0 + kA != 0.  Independent
    of the branch formulas; used to cross-check them.
    """
    if gcd(a, c) != 1:
        return []
    _, s, r = xgcd(a, c)  # s*a + r*c = 1 -> y0 = (-r, s)
    y0 = (-r, s)
    B = basis_of(I, (a, c) + y0)
    A, B0, C0 = B.im2()
    # A = Im(x^2), B0 = Im(y0^2), C0 = Im(x y0) as sqrt(D)-coefficients
    if A == 0:
        if C0 == 0:
            return []
        k1 = -(B0 + C0) / (2 * C0)
        ks = integers_in(SurdValue(k1), SurdValue(k1 + 1))
    else:
        disc = (2 * C0 + A) ** 2 - 4 * A * (A + B0 + C0)
        if disc < 0:
            return []
        centre = -(2 * C0 + A) / (2 * A)
        rad = disc / (4 * A * A)
        r1 = SurdValue(centre, -1, rad)
        r2 = SurdValue(centre, 1, rad)
        if rad >= Fraction(1, 4):  # roots at least one apart
            ks = integers_in(r1, r1 + 1) + integers_in(r2, r2 + 1)
        else:
            ks = integers_in(r1, r2) + integers_in(r1 + 1, r2 + 1)
    out = set()
    for k in ks:
        if C0 + k * A == 0:
            continue
        t4 = (a, c, y0[0] + k * a, y0[1] + k * c)
        out.add(normalize(I, t4))
    return sorted(out)
