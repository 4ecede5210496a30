"""Acceptance gate: eight end-to-end criteria at their stated tolerances.

Each check prints one PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Also runnable directly: ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import math
import os
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))
from conftest import random_principal_ideals  # noqa: E402

from wrtwists.criteria import cos_theta, f1_coeff, f2_coeff, twist_embed  # noqa: E402
from wrtwists.enumeration import all_good_tuples, basis_of  # noqa: E402
from wrtwists.field import FieldDesc, QuadElem, is_squarefree  # noqa: E402
from wrtwists.ideal import canonical_basis, ring_of_integers  # noqa: E402
from wrtwists.oracle import brute_force_good_tuples  # noqa: E402
from wrtwists.similarity import Label, classify  # noqa: E402

RESULTS: dict[int, str] = {}
CORPUS_SIZE = 240

D201_TUPLES = {(1, 0, 0, 1), (2, -205, -1, 102), (0, 1, 1, -102), (0, 1, 1, 0), (1, -102, -2, 205), (1, -102, 0, 1)}
D201_PAIRINGS = [
    {(1, 0, 0, 1), (0, 1, 1, 0)},
    {(2, -205, -1, 102), (1, -102, -2, 205)},
    {(0, 1, 1, -102), (1, -102, 0, 1)},
]

_corpus = None


def corpus():
    global _corpus
    if _corpus is None:
        _corpus = [(I, all_good_tuples(I)) for I in random_principal_ideals(CORPUS_SIZE)]
    return _corpus


def record(n: int, ok: bool, detail: str) -> bool:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def criterion_1():
    start = time.perf_counter()
    I = canonical_basis([QuadElem(6, 3)], FieldDesc(201))
    tuples = all_good_tuples(I)
    classes = classify(I, tuples)
    elapsed = time.perf_counter() - start
    ok = (
        I.as_tuple() == (615, 6, 3)
        and len(tuples) == 6
        and set(tuples) == D201_TUPLES
        and sorted(map(sorted, (set(c.representatives) for c in classes))) == sorted(map(sorted, D201_PAIRINGS))
        and elapsed < 1.0
    )
    return record(1, ok, f"D=201: basis {I.as_tuple()}, {len(tuples)} tuples, {len(classes)} classes, {elapsed:.3f}s (< 1s)")


def _ring_classes(residue: bool):
    bad = []
    ds = [d for d in range(1, 501) if is_squarefree(d) and FieldDesc(d).residue == residue]
    want = Fraction(1, 2) if residue else Fraction(0)
    for d in ds:
        I = ring_of_integers(FieldDesc(d))
        classes = classify(I, all_good_tuples(I))
        if len(classes) != 1 or classes[0].cos_abs != want:
            bad.append(d)
    return ds, bad


_ring_time = {}


def criterion_2():
    start = time.perf_counter()
    ds, bad = _ring_classes(residue=False)
    _ring_time[2] = time.perf_counter() - start
    ok = not bad and _ring_time[2] < 5.0
    return record(2, ok, f"O_K non-residue: {len(ds)} fields, {len(bad)} failures {bad[:5]}, {_ring_time[2]:.2f}s")


def criterion_3():
    start = time.perf_counter()
    ds, bad = _ring_classes(residue=True)
    _ring_time[3] = time.perf_counter() - start
    total = sum(_ring_time.values())
    ok = not bad and total < 5.0
    return record(3, ok, f"O_K residue: {len(ds)} fields, {len(bad)} failures {bad[:5]}, {total:.2f}s with criterion 2 (< 5s)")


def criterion_4():
    start = time.perf_counter()
    ideals = random_principal_ideals(CORPUS_SIZE)
    mismatches = []
    for I in ideals:
        if set(all_good_tuples(I)) != brute_force_good_tuples(I):
            mismatches.append((I.field.d, I.as_tuple()))
    elapsed = time.perf_counter() - start
    residue = sum(I.field.residue for I in ideals)
    ok = len(ideals) >= 200 and residue and residue < len(ideals) and not mismatches and elapsed < 60.0
    return record(
        4,
        ok,
        f"oracle: {len(ideals)} ideals ({residue} residue), {len(mismatches)} mismatches {mismatches[:3]}, {elapsed:.1f}s (< 60s)",
    )


def criterion_5():
    empty = [I.as_tuple() for I, tuples in corpus() if not tuples]
    return record(5, not empty, f"non-empty: {len(corpus())} ideals, {len(empty)} empty")


def criterion_6():
    violations = []
    for I, tuples in corpus():
        n = len(classify(I, tuples))
        if I.field.residue:
            bound = 6 + 2 * ((2 * I.y + I.g + 1) // 2)
        else:
            bound = 6 + 2 * ((I.y + 1) // 2)
        if n > bound:
            violations.append((I.field.d, I.as_tuple(), n, bound))
    return record(6, not violations, f"count bounds: {len(violations)} violations {violations[:3]}")


def criterion_7():
    bad, checked, worst_norm, worst_cos = [], 0, 0.0, 0.0
    for I, tuples in corpus():
        for t4 in tuples:
            B = basis_of(I, t4)
            v1, v2 = twist_embed(B)
            n1, n2 = math.hypot(*v1), math.hypot(*v2)
            rel = abs(n1 - n2) / max(n1, n2)
            fcos = (v1[0] * v2[0] + v1[1] * v2[1]) / (n1 * n2)
            diff = abs(fcos - float(cos_theta(B)))
            worst_norm, worst_cos = max(worst_norm, rel), max(worst_cos, diff)
            checked += 1
            if rel > 1e-9 or abs(fcos) > 0.5 + 1e-12 or diff > 1e-9:
                bad.append((I.field.d, I.as_tuple(), t4))
    return record(
        7,
        not bad,
        f"numeric: {checked} bases, {len(bad)} failures, max norm rel diff {worst_norm:.1e}, max cos diff {worst_cos:.1e}",
    )


def criterion_8():
    bad, hexes = [], 0
    for I, tuples in corpus():
        label = {t4: cl.label for cl in classify(I, tuples) for t4 in cl.representatives}
        for t4 in tuples:
            B = basis_of(I, t4)
            is_hex = label[t4] is Label.HEXAGONAL
            hexes += is_hex
            if (f1_coeff(B) * f2_coeff(B) == 0) != is_hex:
                bad.append((I.field.d, I.as_tuple(), t4))
    return record(8, not bad, f"hexagonal criterion: {hexes} hexagonal tuples, {len(bad)} counterexamples")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(check):
    assert check(), RESULTS.get(CRITERIA.index(check) + 1)


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    sys.exit(0 if all(results) else 1)
