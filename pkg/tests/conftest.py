import sys
import random

import pytest

from wrtwists.field import FieldDesc, QuadElem, is_squarefree
from wrtwists.ideal import canonical_basis

SQUAREFREE_UP_TO_60 = [d for d in range(1, 61) if is_squarefree(d)]


def random_principal_ideals(n: int, seed: int = 1, t_max: int = 2000):
    """Principal ideals <p + q*delta>, |p|, |q| <= 12, D <= 60, t <= t_max."""
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < n:
        d = rng.choice(SQUAREFREE_UP_TO_60)
        p, q = rng.randint(-12, 12), rng.randint(-12, 12)
        if p == 0 and q == 0:
            continue
        k = FieldDesc(d)
        I = canonical_basis([QuadElem(p, q)], k)
        key = (d, I.as_tuple())
        if I.t > t_max or key in seen:
            continue
        seen.add(key)
        out.append(I)
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_principal_ideals(240)


@pytest.fixture
def d201():
    from wrtwists.ideal import IdealTriple

    return IdealTriple(FieldDesc(201), 615, 6, 3)


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
