from __future__ import annotations

import os
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings

from minksum.polytope import VPolytope, random_polytope

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[_ACCEPTANCE]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)


# ---------------------------------------------------------------- oracles


def fraction_det(rows) -> Fraction:
    """Textbook Gaussian elimination over Fractions (independent of Bareiss)."""
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return out


def fraction_solve(A, b) -> list[Fraction]:
    n = len(A)
    m = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * bb for a, bb in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def gale_facets(D: int, n: int) -> list[tuple[int, ...]]:
    """Facets of C_D(n) on parameters 0..n-1 by the evenness condition."""
    out = []
    for S in combinations(range(n), D):
        s = set(S)
        ok = True
        outside = [i for i in range(n) if i not in s]
        for a, b in zip(outside, outside[1:]):
            if sum(1 for x in S if a < x < b) % 2:
                ok = False
                break
        if ok:
            out.append(S)
    return out


def gale_fvector(D: int, n: int) -> tuple[int, ...]:
    faces = set()
    for F in gale_facets(D, n):
        for k in range(1, D + 1):
            faces.update(combinations(F, k))
    return (1, *(sum(1 for f in faces if len(f) == k) for k in range(1, D + 1)))


# ---------------------------------------------------------------- corpora


def cyclic(d: int, params) -> VPolytope:
    return VPolytope(d, tuple(tuple(Fraction(t) ** i for i in range(1, d + 1)) for t in params))


def random_pairs(count: int, seed: int = 2024, max_d: int = 4, max_n: int = 8):
    """Random summand pairs with d <= max_d and n <= max_n (all points extreme)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, max_d)
        n1 = rng.randint(d + 1, max_n)
        n2 = rng.randint(d + 1, max_n)
        P1 = random_polytope(d, n1, rng, spread=6)
        shift = [rng.randint(-5, 5) for _ in range(d)]
        P2 = random_polytope(d, n2, rng, spread=6).translate(shift)
        out.append((P1, P2))
    return out


def lattice_fvector_ok(lat) -> bool:
    d = lat.intrinsic_dim
    f = [len(lat.faces_of_dim(k)) for k in range(d)]
    return sum((-1) ** i * f[i] for i in range(d)) == 1 - (-1) ** d
