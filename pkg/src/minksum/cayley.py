"""Minkowski sums through the Cayley embedding.

``P1`` sits at height 0 and ``P2`` at height 1 in one extra dimension.
The proper faces of the joint hull ``P`` that meet both heights form the
face set ``F``.  Its face numbers, shifted by one, are those of
``P1 + P2``.  The apex polytope ``Q`` and the complexes ``K``, ``K1``,
``K2`` are built on demand for the h-vector relations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from . import bounds
from .exactnum import as_rational, format_rational
from .neighborly import is_k_bineighborly, lemma8_check, lemma9_check, neighborliness_report
from .polytope import (
    MAX_DIM,
    MAX_POINTS,
    FaceLattice,
    Point,
    VPolytope,
    beyond_vertex_point,
    convex_hull,
    f_vector,
    is_simplicial,
    star_and_link,
)
from .vectors import FVector, GVector, HVector, dehn_sommerville_check, f_to_h, g_from_h

FaceSet = dict  # frozenset of vertex indices -> face dimension

DEFAULT_LAMBDA = Fraction(1, 2)


def counts(faces: FaceSet, top: int, f_minus_1: int = 1) -> FVector:
    """``(f_-1, f_0, ..., f_top)`` of a face set; the empty face is not read from ``faces``."""
    c = [0] * (top + 1)
    for k in faces.values():
        if 0 <= k <= top:
            c[k] += 1
        elif k > top:
            raise ValueError(f"face of dimension {k} above the declared top {top}")
    return FVector((f_minus_1, *c))


def cayley_embed(P1: VPolytope, P2: VPolytope) -> tuple[tuple[Point, ...], tuple[tuple[int, ...], tuple[int, ...]]]:
    """Lift P1 to height 0 and P2 to height 1; returns the points and the index bipartition."""
    if P1.dim != P2.dim:
        raise ValueError(f"dimension mismatch: {P1.dim} vs {P2.dim}")
    zero, one = Fraction(0), Fraction(1)
    pts = tuple(v + (zero,) for v in P1.vertices) + tuple(v + (one,) for v in P2.vertices)
    n1 = P1.n
    return pts, (tuple(range(n1)), tuple(range(n1, n1 + P2.n)))


@dataclass(eq=False)
class CayleyComplex:
    """Hull of the Cayley embedding plus every derived face set."""

    P1: VPolytope
    P2: VPolytope
    points: tuple[Point, ...]
    partition: tuple[tuple[int, ...], tuple[int, ...]]
    lattice_P: FaceLattice
    lam: Fraction = DEFAULT_LAMBDA
    warnings: list[str] = field(default_factory=list)

    @classmethod
    def build(
        cls,
        P1: VPolytope,
        P2: VPolytope,
        lam=DEFAULT_LAMBDA,
        *,
        max_dim: int = MAX_DIM,
        max_points: int = MAX_POINTS,
    ) -> CayleyComplex:
        lam = as_rational(lam)
        if not 0 < lam < 1:
            raise ValueError("lambda must lie strictly between 0 and 1")
        pts, part = cayley_embed(P1, P2)
        lat = convex_hull(pts, P1.dim + 1, max_dim=max_dim, max_points=max_points)
        if lat.nonextreme:
            raise ValueError(f"summand points {list(lat.nonextreme)} are not vertices of their polytope")
        cx = cls(P1, P2, pts, part, lat, lam)
        if cx.summands_full and not cx.simplicial_except_ends:
            cx.warnings.append("Cayley polytope is not simplicial outside the two end facets; h-vector checks skipped")
        return cx

    @property
    def d(self) -> int:
        return self.P1.dim

    @property
    def n1(self) -> int:
        return len(self.partition[0])

    @property
    def n2(self) -> int:
        return len(self.partition[1])

    @property
    def summands_full(self) -> bool:
        """Both summands are d-dimensional, so they appear as facets of P."""
        lat = self.lattice_P
        return lat.full_dimensional and all(lat.face_dims.get(frozenset(p)) == self.d for p in self.partition)

    @cached_property
    def simplicial_except_ends(self) -> bool:
        return is_simplicial(self.lattice_P, exclude=self.partition)

    @cached_property
    def F(self) -> FaceSet:
        return extract_F(self)

    def boundary_of(self, j: int) -> FaceSet:
        """Proper faces of summand j (as faces of P), j = 1 or 2."""
        part = set(self.partition[j - 1])
        return {f: k for f, k in self.lattice_P.proper_faces().items() if f <= part and k < self.d}

    @cached_property
    def dP1(self) -> FaceSet:
        return self.boundary_of(1)

    @cached_property
    def dP2(self) -> FaceSet:
        return self.boundary_of(2)

    @cached_property
    def Q(self) -> FaceLattice:
        return build_Q(self)

    @cached_property
    def apexes(self) -> tuple[int, int]:
        n = len(self.points)
        return n, n + 1

    @cached_property
    def K_complexes(self) -> tuple[FaceSet, FaceSet, FaceSet]:
        return build_K_complexes(self)

    # f-vectors ---------------------------------------------------------

    def f_F(self) -> FVector:
        return counts(self.F, self.d, f_minus_1=-1)

    def f_boundary(self, j: int) -> FVector:
        return counts(self.dP1 if j == 1 else self.dP2, self.d - 1)

    def f_sum(self) -> FVector:
        fF = self.f_F()
        return FVector((1, *(fF[k] for k in range(1, self.d + 1))))


def extract_F(cx: CayleyComplex, lam=None) -> FaceSet:
    """Proper faces of P meeting the hyperplane ``x_(d+1) = lam``.

    The test is geometric: a face meets the hyperplane iff its vertex
    heights straddle ``lam``.  For the Cayley layout this is the same as
    having vertices at both heights, whatever ``lam`` in (0, 1).
    """
    lam = cx.lam if lam is None else as_rational(lam)
    if not 0 < lam < 1:
        raise ValueError("lambda must lie strictly between 0 and 1")
    pts = cx.points
    out = {}
    for f, k in cx.lattice_P.proper_faces().items():
        hs = [pts[i][-1] for i in f]
        if min(hs) <= lam <= max(hs):
            out[f] = k
    return out


def section_fvector(cx: CayleyComplex, lam=None) -> FVector:
    """f-vector of the slice ``P ∩ {x_(d+1) = lam}`` computed by an independent hull."""
    lam = cx.lam if lam is None else as_rational(lam)
    pts = cx.points
    v1 = set(cx.partition[0])
    cuts = []
    for f, k in cx.F.items():
        if k != 1:
            continue
        a, b = sorted(f, key=lambda i: i not in v1)
        cuts.append(tuple((1 - lam) * x + lam * y for x, y in zip(pts[a][:-1], pts[b][:-1])))
    return f_vector(convex_hull(cuts, cx.d, max_points=max(MAX_POINTS, len(cuts))))


def minkowski_fvector_via_cayley(P1: VPolytope, P2: VPolytope, **kw) -> FVector:
    """``(1, f_0, ..., f_(d-1))`` of ``P1 + P2`` read off the Cayley face set."""
    return CayleyComplex.build(P1, P2, **kw).f_sum()


def direct_minkowski_sum(P1: VPolytope, P2: VPolytope, *, max_dim: int = MAX_DIM, max_points: int = MAX_POINTS) -> FaceLattice:
    """Hull of all pairwise vertex sums, with no Cayley detour."""
    if P1.dim != P2.dim:
        raise ValueError(f"dimension mismatch: {P1.dim} vs {P2.dim}")
    sums = {tuple(a + b for a, b in zip(p, q)) for p in P1.vertices for q in P2.vertices}
    return convex_hull(sorted(sums), P1.dim, max_dim=max_dim, max_points=max_points)


def build_Q(cx: CayleyComplex) -> FaceLattice:
    """Hull of P's vertices plus an apex beyond each end facet."""
    if not cx.summands_full:
        raise ValueError("both summands must be full-dimensional facets of the Cayley polytope")
    lat = cx.lattice_P
    y1 = beyond_vertex_point(lat, cx.partition[0])
    y2 = beyond_vertex_point(lat, cx.partition[1])
    pts = cx.points + (y1, y2)
    return convex_hull(pts, cx.d + 1, max_points=max(MAX_POINTS, len(pts)))


def build_K_complexes(cx: CayleyComplex) -> tuple[FaceSet, FaceSet, FaceSet]:
    """``K`` = faces of P below some face of F; ``K_j`` adds the star of apex j in dQ.

    All three include the empty face.
    """
    proper = cx.lattice_P.proper_faces()
    tops = [f for f in cx.F]
    K: FaceSet = {frozenset(): -1}
    for f, k in proper.items():
        if f in cx.F or any(f <= g for g in tops):
            K[f] = k
    Ks = []
    for y in cx.apexes:
        star, _ = star_and_link(cx.Q, y)
        Kj = dict(K)
        Kj.update(star)
        Ks.append(Kj)
    return K, Ks[0], Ks[1]


def h_of_F(cx: CayleyComplex) -> HVector:
    return f_to_h(cx.f_F(), cx.d + 1)


def _f_of_complex(faces: FaceSet, top: int) -> FVector:
    return counts({f: k for f, k in faces.items() if k >= 0}, top)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skipped"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _vec(v) -> list:
    if isinstance(v, FVector):
        return list(v.counts)
    return list(v.entries)


def verification_report(cx: CayleyComplex) -> dict:
    """Every identity and inequality of the h-vector machinery on one instance."""
    d, n1, n2 = cx.d, cx.n1, cx.n2
    checks: list[CheckResult] = []
    vectors: dict = {}

    def add(name, ok, detail=""):
        checks.append(CheckResult(name, "pass" if ok else "fail", detail))

    def skip(name, why):
        checks.append(CheckResult(name, "skipped", why))

    f_sum = cx.f_sum()
    vectors["sum"] = list(f_sum.proper())
    vectors["F"] = _vec(cx.f_F())

    direct = f_vector(direct_minkowski_sum(cx.P1, cx.P2, max_points=max(MAX_POINTS, cx.P1.n * cx.P2.n)))
    vectors["sum_direct"] = list(direct.proper())
    add("cayley_vs_direct_sum", direct.proper()[: d] == f_sum.proper()[: d], f"direct={list(direct.proper())}")

    lam_ok = all(extract_F(cx, l) == cx.F for l in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)))
    add("lambda_independence", lam_ok)

    part = cx.partition
    fF = cx.f_F()
    rep = neighborliness_report(cx.lattice_P, part)
    vectors["neighborliness"] = rep.to_json()
    add("bineighborly_implies_neighborly", all(lemma8_check(cx.lattice_P, part, k) for k in range(2, d + 3)))
    add("bineighborly_plus_sides_neighborly", all(lemma9_check(cx.lattice_P, part, k) for k in range(1, d + 2)))

    full = cx.summands_full
    if full and d >= 2:
        try:
            b = bounds.BoundReport.build(d, n1, n2, list(f_sum.proper()))
            vectors["bound_table"] = b.to_json()["rows"]
            add("sum_within_bound", True)
        except ValueError as exc:
            add("sum_within_bound", False, str(exc))
    else:
        skip("sum_within_bound", "summands need d >= 2 and at least d+1 vertices each")

    if not full:
        for name in ("mixed_face_cap_and_equality", "fkK", "fkKj", "fkQ1", "link_of_apex", "dehn_sommerville", "structural_identities", "hF_recurrence", "hF_caps"):
            skip(name, "a summand is not full-dimensional")
        return _finish(cx, checks, vectors)

    fP1, fP2 = cx.f_boundary(1), cx.f_boundary(2)
    vectors["dP1"], vectors["dP2"] = _vec(fP1), _vec(fP2)
    Q = cx.Q
    fQ = f_vector(Q)
    vectors["dQ"] = _vec(fQ)
    K, K1, K2 = cx.K_complexes
    fK, fK1, fK2 = (_f_of_complex(x, d) for x in (K, K1, K2))
    vectors["K"], vectors["K1"], vectors["K2"] = _vec(fK), _vec(fK1), _vec(fK2)

    add("fkK", all(fK[k] == fF[k] + fP1[k] + fP2[k] for k in range(-1, d + 1)))
    add(
        "fkKj",
        all(fK1[k] == fK[k] + fP1[k - 1] and fK2[k] == fK[k] + fP2[k - 1] for k in range(0, d + 1)),
    )
    add(
        "fkQ1",
        all(fQ[k] == fF[k] + fP1[k] + fP1[k - 1] + fP2[k] + fP2[k - 1] for k in range(0, d + 1)),
    )
    links_ok = True
    for y, dP in zip(cx.apexes, (cx.dP1, cx.dP2)):
        _, link = star_and_link(Q, y)
        links_ok &= {f: k for f, k in link.items() if k >= 0} == dP
    add("link_of_apex", links_ok)

    if not cx.simplicial_except_ends:
        for name in ("mixed_face_cap_and_equality", "dehn_sommerville", "structural_identities", "hF_recurrence", "hF_caps"):
            skip(name, "Cayley polytope is not simplicial outside the end facets")
        return _finish(cx, checks, vectors)

    # f_(k-1)(F) <= number of mixed k-sets, with equality iff k-bineighborly
    ok10 = True
    for k in range(1, d + 2):
        cap = bounds.bineighborly_cap(n1, n2, k)
        if fF[k - 1] > cap:
            ok10 = False
        if k >= 2 and (fF[k - 1] == cap) != is_k_bineighborly(cx.lattice_P, part, k):
            ok10 = False
    add("mixed_face_cap_and_equality", ok10)

    hF = h_of_F(cx)
    hP1, hP2 = f_to_h(fP1, d), f_to_h(fP2, d)
    hQ, hK, hK1, hK2 = (f_to_h(v, d + 1) for v in (fQ, fK, fK1, fK2))
    gP1, gP2 = g_from_h(hP1, extended=True), g_from_h(hP2, extended=True)
    vectors["h"] = {"F": _vec(hF), "dP1": _vec(hP1), "dP2": _vec(hP2), "dQ": _vec(hQ), "K": _vec(hK), "K1": _vec(hK1), "K2": _vec(hK2)}
    add("dehn_sommerville", all(dehn_sommerville_check(h) for h in (hQ, hP1, hP2)))
    add("structural_identities", bounds.structural_identity_check(hQ, hF, hP1, hP2, hK, hK1, hK2, gP1, gP2))
    add("hF_recurrence", bounds.hF_recurrence_holds(hF, gP1, gP2, n1, n2, d))
    caps_ok = all(
        hF[k] <= bounds.hF_upper(d, n1, n2, k) and hF[d + 1 - k] <= bounds.hF_upper_high(d, n1, n2, k)
        for k in range(d + 2)
    )
    add("hF_caps", caps_ok)
    vectors["hF_cap_equal_through"] = _equal_prefix(hF, lambda k: bounds.hF_upper(d, n1, n2, k), d)
    vectors["hF_high_cap_equal_through"] = _equal_prefix(
        HVector(tuple(hF[d + 1 - k] for k in range(d + 2))), lambda k: bounds.hF_upper_high(d, n1, n2, k), d
    )
    return _finish(cx, checks, vectors)


def _equal_prefix(h: HVector, cap, d: int) -> int:
    """Largest l with equality for all 0 <= k <= l (-1 if none)."""
    l = -1
    for k in range(d + 2):
        if h[k] != cap(k):
            break
        l = k
    return l


def _finish(cx: CayleyComplex, checks: list[CheckResult], vectors: dict) -> dict:
    return {
        "d": cx.d,
        "n1": cx.n1,
        "n2": cx.n2,
        "lambda": format_rational(cx.lam),
        "warnings": list(cx.warnings),
        "vectors": vectors,
        "checks": [c.to_json() for c in checks],
        "ok": all(c.status != "fail" for c in checks),
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def summands_from_points(points1: Iterable, points2: Iterable) -> tuple[VPolytope, VPolytope]:
    return VPolytope.from_points(points1), VPolytope.from_points(points2)
