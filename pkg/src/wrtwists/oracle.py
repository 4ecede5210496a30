"""Brute-force reference for the good-tuple enumeration.

Works straight from the definition of a good basis (unimodular change of
basis, F <= 0, Im(xy) != 0) and shares none of the interval formulas used
by ``enumeration``.  The one ingredient beyond the definition is a bound
that every vector of a good basis obeys:

    vol^2 = Im(xy)^2 - Im(x^2) Im(y^2)
          >= (Im(x^2) + Im(y^2))^2 - Im(x^2) Im(y^2)    (F <= 0)
          >= 3/4 Im(x^2)^2,

so 3 Re(x)^2 c^2 <= t^2 for x = a*t + c*v, which confines (a, c) to a box
of half-width t (resp. 2t when -D = 1 mod 4).
"""
from __future__ import annotations

import itertools
import math
from math import gcd

import numpy as np

from .criteria import BasisPair, is_good
from .enumeration import GoodTuple, normalize
from .ideal import IdealTriple

_BLOCK = 512
_INT64_T_MAX = 10_000


class InsufficientBound(ValueError):
    def __init__(self, safe_bound: int):
        super().__init__(f"scan bound must be at least {safe_bound}")
        self.safe_bound = safe_bound


def safe_bound(I: IdealTriple) -> int:
    return 2 * I.t if I.field.residue else I.t


def _scaled_re(I: IdealTriple, a: int, c: int) -> int:
    # 2*Re(x) when -D = 1 mod 4, Re(x) otherwise; always an integer
    if I.field.residue:
        return 2 * a * I.t + c * (2 * I.y + I.g)
    return a * I.t + c * I.y


def candidate_vectors(I: IdealTriple, bound: int) -> list[tuple[int, int]]:
    """Primitive (a, c), one per sign pair, with |a|, |c| <= bound and 3 Re^2 c^2 <= t^2."""
    scale = 2 if I.field.residue else 1
    limit = (scale * I.t) ** 2
    out = []
    for c in range(0, bound + 1):
        if c == 0:
            out.append((1, 0))
            continue
        # |Re(x)| <= t/sqrt(3) < t puts a within one of -c*Re(v)/t
        centre = -c * I.re_v / I.t
        lo = max(-bound, math.floor(centre) - 1)
        hi = min(bound, math.ceil(centre) + 1)
        for a in range(lo, hi + 1):
            if gcd(a, c) != 1:
                continue
            r = _scaled_re(I, a, c)
            if 3 * r * r * c * c <= limit:
                out.append((a, c))
    return out


def _good_pairs(I: IdealTriple, vecs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    n = len(vecs)
    # |Im(xy)| <= 8 (2t)^2 on the candidates; square it inside int64 or fall back
    dtype = np.int64 if I.t <= _INT64_T_MAX else object
    a = np.array([v[0] for v in vecs], dtype=dtype)
    c = np.array([v[1] for v in vecs], dtype=dtype)
    # Re and Im up to the common factors 1/2, g, sqrt(D), which cancel in F
    R = np.array([_scaled_re(I, *v) for v in vecs], dtype=dtype)
    S = c
    sq = 2 * R * S  # Im(x^2)
    hits = []
    for start in range(0, n, _BLOCK):
        sl = slice(start, start + _BLOCK)
        det = a[sl, None] * c[None, :] - c[sl, None] * a[None, :]
        unimod = np.abs(det) == 1
        cross = R[sl, None] * S[None, :] + R[None, :] * S[sl, None]  # Im(xy)
        tot = sq[sl, None] + sq[None, :]
        good = unimod & (cross != 0) & (tot * tot <= cross * cross)
        for i, j in zip(*np.nonzero(good)):
            hits.append((start + int(i), int(j)))
    return hits


def brute_force_good_tuples(I: IdealTriple, bound: int | None = None) -> set[GoodTuple]:
    sb = safe_bound(I)
    if bound is None:
        bound = sb
    if bound < sb:
        raise InsufficientBound(sb)
    vecs = candidate_vectors(I, bound)
    out = set()
    for i, j in _good_pairs(I, vecs):
        out.add(normalize(I, vecs[i] + vecs[j]))
    return out


def brute_force_naive(I: IdealTriple, bound: int) -> set[GoodTuple]:
    """Plain four-fold loop over the box with no pruning; tiny bounds only."""
    r = range(-bound, bound + 1)
    out = set()
    for a, c, b, d in itertools.product(r, repeat=4):
        if a * d - b * c not in (1, -1):
            continue
        if is_good(BasisPair(I.elem_at(a, c), I.elem_at(b, d), I.field)):
            out.add(normalize(I, (a, c, b, d)))
    return out


def gauss_reduce(b1, b2, max_iter: int = 10_000):
    """Lagrange reduction of a planar basis: |b1| <= |b2| and |<b1,b2>| <= |b1|^2/2."""
    b1, b2 = np.asarray(b1, dtype=float), np.asarray(b2, dtype=float)
    if abs(b1[0] * b2[1] - b1[1] * b2[0]) == 0:
        raise ValueError("degenerate basis")
    if b1 @ b1 > b2 @ b2:
        b1, b2 = b2, b1
    for _ in range(max_iter):
        mu = round((b1 @ b2) / (b1 @ b1))
        b2 = b2 - mu * b1
        if b2 @ b2 >= b1 @ b1:
            return b1, b2
        b1, b2 = b2, b1
    raise RuntimeError("Lagrange reduction did not terminate")


def is_well_rounded_numeric(b1, b2, tol: float = 1e-9) -> bool:
    r1, r2 = gauss_reduce(b1, b2)
    n1, n2 = math.sqrt(r1 @ r1), math.sqrt(r2 @ r2)
    cos = (r1 @ r2) / (n1 * n2)
    return abs(n1 - n2) <= tol * max(n1, n2) and abs(cos) <= 0.5 + tol
