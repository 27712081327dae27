"""Polytope pairs whose Minkowski sum has the maximum number of faces.

Even d: two cyclic polytopes on disjoint stretches of the moment curve.

Odd d: vertices on two moment-like curves in one dimension higher,

    gamma_1(t; z) = (t, z t^d, t^2, ..., t^(d-1), 0)
    gamma_2(t; z) = (z t^d, t, t^2, ..., t^(d-1), 1),

with the first curve sampled at ``alpha_i * tau`` and the second at
``beta_j``.  A scale ``tau`` and a perturbation ``zeta`` are found by
halving from 1, and each is accepted only once every hyperplane
determinant in its certificate is strictly positive.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .exactnum import Matrix, as_rational, det, format_rational
from .neighborly import mixed_subsets
from .polytope import Point, VPolytope
from .vectors import binom

DEFAULT_EPSILON = Fraction(1, 2)
MAX_HALVINGS = 64


def moment_curve_point(t, d: int) -> Point:
    t = as_rational(t)
    return tuple(t**i for i in range(1, d + 1))


def even_witness(d: int, n1: int, n2: int) -> tuple[VPolytope, VPolytope]:
    """Cyclic polytopes with parameters ``1..n1`` and ``n1+1..n1+n2``."""
    if d < 2 or d % 2:
        raise ValueError(f"even_witness needs an even d >= 2, got d={d}")
    _check_sizes(d, n1, n2)
    P1 = VPolytope(d, tuple(moment_curve_point(t, d) for t in range(1, n1 + 1)))
    P2 = VPolytope(d, tuple(moment_curve_point(t, d) for t in range(n1 + 1, n1 + n2 + 1)))
    return P1, P2


def _check_sizes(d: int, n1: int, n2: int) -> None:
    if n1 < d + 1 or n2 < d + 1:
        raise ValueError(f"each summand needs at least d+1={d + 1} vertices, got n1={n1}, n2={n2}")


def moment_like_curves(t, zeta, d: int) -> tuple[Point, Point]:
    """``(gamma_1(t; zeta), gamma_2(t; zeta))`` in E^(d+1)."""
    t, zeta = as_rational(t), as_rational(zeta)
    if t <= 0:
        raise ValueError("t must be positive")
    if zeta < 0:
        raise ValueError("zeta must be non-negative")
    if d < 2:
        raise ValueError("d must be >= 2")
    middle = tuple(t**i for i in range(2, d))
    g1 = (t, zeta * t**d) + middle + (Fraction(0),)
    g2 = (zeta * t**d, t) + middle + (Fraction(1),)
    return g1, g2


@dataclass(frozen=True)
class Certificate:
    """Outcome of one exhaustive positivity pass."""

    value: Fraction
    subsets: int
    determinants: int
    min_determinant: Fraction | None
    passed: bool

    def to_json(self) -> dict:
        return {
            "value": format_rational(self.value),
            "subsets": self.subsets,
            "determinants_checked": self.determinants,
            "min_determinant": None if self.min_determinant is None else format_rational(self.min_determinant),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class WitnessParams:
    d: int
    n1: int
    n2: int
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    epsilon: Fraction
    tau_star: Fraction | None = None
    zeta_star: Fraction | None = None
    tau_certificate: Certificate | None = field(default=None, compare=False)
    zeta_certificate: Certificate | None = field(default=None, compare=False)
    tau_trials: int = field(default=0, compare=False)
    zeta_trials: int = field(default=0, compare=False)

    @classmethod
    def create(cls, d: int, n1: int, n2: int, alpha=None, beta=None, epsilon=DEFAULT_EPSILON) -> WitnessParams:
        if d < 3 or d % 2 == 0:
            raise ValueError(f"the moment-like construction needs an odd d >= 3, got d={d}")
        _check_sizes(d, n1, n2)
        a = tuple(as_rational(x) for x in (range(1, n1 + 1) if alpha is None else alpha))
        b = tuple(as_rational(x) for x in (range(1, n2 + 1) if beta is None else beta))
        eps = as_rational(epsilon)
        if len(a) != n1 or len(b) != n2:
            raise ValueError("alpha must have n1 entries and beta n2 entries")
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        for name, seq in (("alpha", a), ("beta", b)):
            if seq[0] <= 0:
                raise ValueError(f"{name} must be positive")
            if any(y <= x + eps for x, y in zip(seq, seq[1:])):
                raise ValueError(f"{name} must increase by more than epsilon between consecutive entries")
        return cls(d, n1, n2, a, b, eps)

    @property
    def m(self) -> int:
        return (self.d + 1) // 2

    @property
    def subset_count(self) -> int:
        return binom(self.n1 + self.n2, self.m) - binom(self.n1, self.m) - binom(self.n2, self.m)

    @property
    def determinant_count(self) -> int:
        return self.subset_count * (self.n1 + self.n2 - self.m)

    def vertex(self, idx: int, tau, zeta=0) -> Point:
        """Curve point for index ``idx`` (first n1 on gamma_1, then gamma_2)."""
        if idx < self.n1:
            return moment_like_curves(self.alpha[idx] * as_rational(tau), zeta, self.d)[0]
        return moment_like_curves(self.beta[idx - self.n1], zeta, self.d)[1]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n1": self.n1,
            "n2": self.n2,
            "alpha": [format_rational(x) for x in self.alpha],
            "beta": [format_rational(x) for x in self.beta],
            "epsilon": format_rational(self.epsilon),
            "tau_star": None if self.tau_star is None else format_rational(self.tau_star),
            "zeta_star": None if self.zeta_star is None else format_rational(self.zeta_star),
            "tau_certificate": None if self.tau_certificate is None else self.tau_certificate.to_json(),
            "zeta_certificate": None if self.zeta_certificate is None else self.zeta_certificate.to_json(),
            "tau_trials": self.tau_trials,
            "zeta_trials": self.zeta_trials,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _check_subset(p: WitnessParams, U: Sequence[int]) -> tuple[int, ...]:
    U = tuple(sorted(U))
    if len(U) != p.m:
        raise ValueError(f"subset must have {p.m} elements, got {len(U)}")
    if len(set(U)) != len(U) or U[0] < 0 or U[-1] >= p.n1 + p.n2:
        raise ValueError("subset indices must be distinct and in range")
    if U[0] >= p.n1 or U[-1] < p.n1:
        raise ValueError("subset must meet both vertex sets")
    return U


def hyperplane_matrix(p: WitnessParams, U: Sequence[int], probe: Sequence, tau, zeta=0) -> Matrix:
    """The (d+2)x(d+2) matrix: probe column, then each chosen vertex beside its epsilon-shifted twin."""
    U = _check_subset(p, U)
    tau, zeta = as_rational(tau), as_rational(zeta)
    probe = tuple(as_rational(x) for x in probe)
    if len(probe) != p.d + 1:
        raise ValueError(f"probe must have {p.d + 1} coordinates")
    cols = [probe]
    for idx in U:
        if idx < p.n1:
            a = p.alpha[idx]
            cols.append(moment_like_curves(a * tau, zeta, p.d)[0])
            cols.append(moment_like_curves((a + p.epsilon) * tau, zeta, p.d)[0])
        else:
            b = p.beta[idx - p.n1]
            cols.append(moment_like_curves(b, zeta, p.d)[1])
            cols.append(moment_like_curves(b + p.epsilon, zeta, p.d)[1])
    rows = [[Fraction(1)] * len(cols)] + [[c[i] for c in cols] for i in range(p.d + 1)]
    return Matrix.from_rows(rows)


def hU_determinant(p: WitnessParams, U: Sequence[int], probe: Sequence, tau=None) -> Fraction:
    """Hyperplane determinant on the unperturbed curves (``zeta = 0``)."""
    tau = p.tau_star if tau is None else tau
    if tau is None:
        raise ValueError("no tau given and none certified yet")
    return det(hyperplane_matrix(p, U, probe, tau, 0))


def F_V(p: WitnessParams, V: Sequence[int], probe: Sequence, zeta, tau=None) -> Fraction:
    """Hyperplane determinant on the perturbed curves."""
    tau = p.tau_star if tau is None else tau
    if tau is None:
        raise ValueError("no tau given and none certified yet")
    return det(hyperplane_matrix(p, V, probe, tau, zeta))


def certify(p: WitnessParams, tau, zeta=0, *, stop_early: bool = True) -> Certificate:
    """Check every mixed m-subset against every other curve vertex at ``(tau, zeta)``."""
    tau, zeta = as_rational(tau), as_rational(zeta)
    n = p.n1 + p.n2
    pts = [p.vertex(i, tau, zeta) for i in range(n)]
    checked, subsets, low, ok = 0, 0, None, True
    for U in mixed_subsets(range(p.n1), range(p.n1, n), p.m):
        subsets += 1
        chosen = set(U)
        for i in range(n):
            if i in chosen:
                continue
            v = det(hyperplane_matrix(p, U, pts[i], tau, zeta))
            checked += 1
            if low is None or v < low:
                low = v
            if v <= 0:
                ok = False
                if stop_early:
                    return Certificate(zeta if zeta else tau, subsets, checked, low, False)
    return Certificate(zeta if zeta else tau, subsets, checked, low, ok)


def find_tau(p: WitnessParams, start=1, max_halvings: int = MAX_HALVINGS) -> WitnessParams:
    """Halve tau from ``start`` until the unperturbed certificate passes."""
    tau = as_rational(start)
    for trial in range(1, max_halvings + 2):
        cert = certify(p, tau, 0)
        if cert.passed:
            return replace(p, tau_star=tau, tau_certificate=cert, tau_trials=trial)
        tau /= 2
    raise RuntimeError(f"no certified tau after {max_halvings} halvings")


def find_zeta(p: WitnessParams, start=1, max_halvings: int = MAX_HALVINGS) -> WitnessParams:
    """Halve zeta from ``start`` until the perturbed certificate passes at the certified tau."""
    if p.tau_star is None:
        raise ValueError("certify tau before searching for zeta")
    zeta = as_rational(start)
    if zeta <= 0:
        raise ValueError("zeta search must start at a positive value")
    for trial in range(1, max_halvings + 2):
        cert = certify(p, p.tau_star, zeta)
        if cert.passed:
            return replace(p, zeta_star=zeta, zeta_certificate=cert, zeta_trials=trial)
        zeta /= 2
    raise RuntimeError(f"no certified zeta after {max_halvings} halvings")


def lifted_vertices(p: WitnessParams) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """Vertices of both summands in E^(d+1), at the certified parameters."""
    if p.tau_star is None or p.zeta_star is None:
        raise ValueError("parameters are not certified")
    n = p.n1 + p.n2
    pts = [p.vertex(i, p.tau_star, p.zeta_star) for i in range(n)]
    return tuple(pts[: p.n1]), tuple(pts[p.n1 :])


def odd_witness(d: int, n1: int, n2: int, alpha=None, beta=None, epsilon=DEFAULT_EPSILON) -> tuple[VPolytope, VPolytope, WitnessParams]:
    """Certified moment-like pair; summands live in E^d after dropping the last coordinate."""
    p = WitnessParams.create(d, n1, n2, alpha, beta, epsilon)
    p = find_zeta(find_tau(p))
    V1, V2 = lifted_vertices(p)
    P1 = VPolytope(d, tuple(v[:-1] for v in V1))
    P2 = VPolytope(d, tuple(v[:-1] for v in V2))
    return P1, P2, p


def witness(d: int, n1: int, n2: int) -> tuple[VPolytope, VPolytope, WitnessParams | None]:
    """Dispatch on the parity of d."""
    if d % 2 == 0:
        return (*even_witness(d, n1, n2), None)
    return odd_witness(d, n1, n2)
