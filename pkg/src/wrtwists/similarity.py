"""Similarity classes of the well-rounded twists, keyed by the exact |cos theta|."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .enumeration import GoodTuple, InvariantViolation, re_at
from .ideal import IdealTriple


class Label(enum.Enum):
    ORTHOGONAL = "Orthogonal"
    HEXAGONAL = "Hexagonal"
    GENERIC = "Generic"


@dataclass(frozen=True)
class TwistClass:
    cos_abs: Fraction
    representatives: list[GoodTuple] = field(default_factory=list)

    @property
    def label(self) -> Label:
        if self.cos_abs == 0:
            return Label.ORTHOGONAL
        if self.cos_abs == Fraction(1, 2):
            return Label.HEXAGONAL
        return Label.GENERIC


def cos_abs_key(I: IdealTriple, t4) -> Fraction:
    """|cos| of the twisted basis from the real parts of x and y alone.

    The common factors of g and sqrt(D) cancel between numerator and
    denominator, leaving |(Re x * c + Re y * d) / (Re x * d + Re y * c)|.
    """
    a, c, b, d = t4
    rx, ry = re_at(I, a, c), re_at(I, b, d)
    den = rx * d + ry * c
    if den == 0:
        raise InvariantViolation(f"{tuple(t4)} violates the nondegeneracy condition")
    key = abs((rx * c + ry * d) / den)
    if key > Fraction(1, 2):
        raise InvariantViolation(f"{tuple(t4)} has |cos| = {key} > 1/2")
    return key


def classify(I: IdealTriple, tuples: Iterable[GoodTuple]) -> list[TwistClass]:
    groups: dict[Fraction, list[GoodTuple]] = {}
    for t4 in tuples:
        groups.setdefault(cos_abs_key(I, t4), []).append(GoodTuple(*t4))
    return [TwistClass(key, sorted(groups[key])) for key in sorted(groups)]
