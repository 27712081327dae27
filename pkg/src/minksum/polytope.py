"""Exact V-polytopes, incremental convex hull and face lattices.

Points are tuples of Fractions.  The hull works on homogeneous integer
lifts ``(L, L*x_1, ..., L*x_d)`` so every predicate is a sign of an
integer dot product.  Faces are identified with the set of input indices
of the extreme points they contain.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .exactnum import as_rational, format_rational
from .vectors import FVector

Point = tuple[Fraction, ...]

MAX_DIM = 8
MAX_POINTS = 64

BEYOND = "beyond"
BENEATH = "beneath"
ON = "on"


def make_point(coords: Iterable) -> Point:
    p = tuple(as_rational(c) for c in coords)
    if not p:
        raise ValueError("a point needs at least one coordinate")
    return p


def homogenize(p: Sequence[Fraction]) -> tuple[int, ...]:
    """Integer homogeneous lift with a positive leading coordinate."""
    den = lcm(*(c.denominator for c in p)) if p else 1
    return (den, *(int(c * den) for c in p))


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


@dataclass(frozen=True)
class VPolytope:
    """A polytope given by its vertex list (ambient dimension ``dim``)."""

    dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if not self.vertices:
            raise ValueError("a polytope needs at least one vertex")
        if any(len(v) != self.dim for v in self.vertices):
            raise ValueError(f"every vertex must have {self.dim} coordinates")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")

    @classmethod
    def from_points(cls, points: Iterable[Iterable]) -> VPolytope:
        pts = tuple(make_point(p) for p in points)
        if not pts:
            raise ValueError("a polytope needs at least one vertex")
        return cls(len(pts[0]), pts)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def translate(self, shift: Sequence) -> VPolytope:
        s = make_point(shift)
        return VPolytope(self.dim, tuple(tuple(a + b for a, b in zip(v, s)) for v in self.vertices))

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [[format_rational(c) for c in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> VPolytope:
        if not isinstance(data, dict) or "dim" not in data or "vertices" not in data:
            raise ValueError('polytope JSON needs "dim" and "vertices"')
        dim = data["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ValueError('"dim" must be an integer')
        verts = data["vertices"]
        if not isinstance(verts, list):
            raise ValueError('"vertices" must be a list')
        pts = []
        for v in verts:
            if not isinstance(v, list):
                raise ValueError("each vertex must be a list of coordinates")
            pts.append(tuple(c if isinstance(c, int) and not isinstance(c, bool) else _coord(c) for c in v))
        return cls(dim, tuple(make_point(p) for p in pts))

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> VPolytope:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _coord(c) -> Fraction:
    if not isinstance(c, str):
        raise ValueError(f"coordinates must be integers or 'p/q' strings, got {c!r}")
    return as_rational(c)


@dataclass(eq=False)
class FaceLattice:
    """Complete face lattice of the convex hull of ``points``.

    ``faces[k + 1]`` lists the k-faces (k = -1 .. intrinsic_dim) as sorted
    tuples of point indices.  ``children[k + 1][i]`` indexes the
    (k-1)-faces of face i; ``parents`` is the reverse relation.
    ``facet_planes[i]`` is the outward integer hyperplane of facet i in
    the homogeneous coordinates of ``frame`` (value < 0 means beneath).
    """

    points: tuple[Point, ...]
    ambient_dim: int
    intrinsic_dim: int
    vertices: tuple[int, ...]
    nonextreme: tuple[int, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    children: tuple[tuple[tuple[int, ...], ...], ...]
    parents: tuple[tuple[tuple[int, ...], ...], ...]
    facet_planes: tuple[tuple[int, ...], ...]
    frame: tuple[int, ...] = field(default=())

    @property
    def full_dimensional(self) -> bool:
        return self.intrinsic_dim == self.ambient_dim

    def faces_of_dim(self, k: int) -> tuple[tuple[int, ...], ...]:
        if -1 <= k <= self.intrinsic_dim:
            return self.faces[k + 1]
        return ()

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return self.faces_of_dim(self.intrinsic_dim - 1)

    @property
    def top(self) -> tuple[int, ...]:
        return self.faces[-1][0]

    @cached_property
    def face_dims(self) -> dict[frozenset, int]:
        """Every face (including empty and top) keyed by its vertex set."""
        return {frozenset(f): k - 1 for k, level in enumerate(self.faces) for f in level}

    def proper_faces(self) -> dict[frozenset, int]:
        """Non-empty faces other than the polytope itself."""
        return {f: k for f, k in self.face_dims.items() if 0 <= k < self.intrinsic_dim}

    def is_face(self, vertex_set: Iterable[int]) -> bool:
        return frozenset(vertex_set) in self.face_dims

    def facet_index(self, facet: Sequence[int] | int) -> int:
        if isinstance(facet, int):
            if not 0 <= facet < len(self.facets):
                raise ValueError(f"facet index {facet} out of range")
            return facet
        key = tuple(sorted(facet))
        try:
            return self.facets.index(key)
        except ValueError:
            raise ValueError(f"{key} is not a facet") from None

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "intrinsic_dim": self.intrinsic_dim,
            "vertices": list(self.vertices),
            "nonextreme": list(self.nonextreme),
            "faces": {str(k - 1): [list(f) for f in level] for k, level in enumerate(self.faces)},
        }

    def canonical(self) -> frozenset:
        """Order-free description: every face as a frozenset of its vertex points."""
        return frozenset((k, frozenset(self.points[i] for i in f)) for f, k in self.face_dims.items())


def _affine_frame(pts: Sequence[Point]) -> tuple[int, ...]:
    """Coordinate indices onto which the affine hull projects isomorphically."""
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return ()
    rows = []
    for d in diffs:
        den = lcm(*(c.denominator for c in d))
        rows.append([int(c * den) for c in d])
    _, pivots = kernels.echelon_int(rows, len(base))
    return tuple(pivots)


class _RankCache:
    def __init__(self, hom):
        self.hom = hom
        self.ncols = len(hom[0])
        self.cache: dict[int, int] = {}

    def affine_dim(self, mask: int) -> int:
        got = self.cache.get(mask)
        if got is None:
            rows = [self.hom[i] for i in _bits(mask)]
            got = kernels.rank_int(rows, self.ncols) - 1 if rows else -1
            self.cache[mask] = got
        return got


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _plane(hom, mask, interior):
    rows = [hom[i] for i in _bits(mask)]
    a = kernels.kernel_vector(rows, len(hom[0]))
    s = kernels.dot_int(a, interior)
    if s == 0:
        raise ArithmeticError("reference point lies on a facet hyperplane")
    return a if s < 0 else tuple(-v for v in a)


def convex_hull(
    points: Iterable[Iterable],
    ambient_dim: int | None = None,
    *,
    max_dim: int = MAX_DIM,
    max_points: int = MAX_POINTS,
) -> FaceLattice:
    """Face lattice of the convex hull of ``points`` (exact, any dimension).

    Lower-dimensional input is hulled inside its affine hull and the
    intrinsic dimension is recorded.  Points that are not extreme are
    listed in ``nonextreme`` and appear in no face.
    """
    pts = tuple(make_point(p) for p in points)
    if not pts:
        raise ValueError("convex hull of an empty point set")
    dim = len(pts[0]) if ambient_dim is None else ambient_dim
    if any(len(p) != dim for p in pts):
        raise ValueError(f"all points must have {dim} coordinates")
    if dim > max_dim:
        raise ValueError(f"ambient dimension {dim} exceeds the guardrail {max_dim}")
    if len(pts) > max_points:
        raise ValueError(f"{len(pts)} points exceed the guardrail {max_points}")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate input points")

    frame = _affine_frame(pts)
    r = len(frame)
    if r == 0:
        raise ValueError("all input points coincide")
    hom = [homogenize([p[c] for c in frame]) for p in pts]
    n = len(pts)
    ranks = _RankCache(hom)

    # initial simplex: greedy affinely independent points
    simplex = [0]
    for i in range(1, n):
        if len(simplex) == r + 1:
            break
        trial = simplex + [i]
        if kernels.rank_int([hom[j] for j in trial], r + 1) == len(trial):
            simplex = trial
    interior = homogenize(centroid([tuple(pts[j][c] for c in frame) for j in simplex]))

    all_simplex = 0
    for j in simplex:
        all_simplex |= 1 << j
    facets: dict[tuple, int] = {}  # oriented primitive plane -> point mask
    for j in simplex:
        mask = all_simplex & ~(1 << j)
        facets[_plane(hom, mask, interior)] = mask

    in_simplex = set(simplex)
    for i in range(n):
        if i in in_simplex:
            continue
        h = hom[i]
        bit = 1 << i
        visible, coplanar, below = [], [], []
        for plane, mask in facets.items():
            s = kernels.dot_int(plane, h)
            if s > 0:
                visible.append((plane, mask))
            elif s == 0:
                coplanar.append(plane)
            else:
                below.append(mask)
        for plane in coplanar:
            facets[plane] |= bit
        if not visible:
            continue
        new: dict[tuple, int] = {}
        for _, fm in visible:
            for gm in below:
                ridge = fm & gm
                if ridge.bit_count() < r - 1 or ranks.affine_dim(ridge) != r - 2:
                    continue
                nm = ridge | bit
                plane = _plane(hom, nm, interior)
                new[plane] = new.get(plane, 0) | nm
        for plane, _ in visible:
            del facets[plane]
        for plane, nm in new.items():
            facets[plane] = facets.get(plane, 0) | nm

    planes = list(facets)
    masks = [facets[p] for p in planes]
    # a boundary point is a vertex iff the facets through it meet only in it
    incident: dict[int, int] = {}
    for mask in masks:
        for i in _bits(mask):
            incident[i] = incident.get(i, -1) & mask
    vert_mask = 0
    for i, meet in incident.items():
        if meet == 1 << i:
            vert_mask |= 1 << i
    vertices = tuple(i for i in range(n) if vert_mask >> i & 1)
    nonextreme = tuple(i for i in range(n) if not vert_mask >> i & 1)

    facet_masks = [m & vert_mask for m in masks]
    return _build_lattice(pts, dim, r, vertices, nonextreme, facet_masks, planes, frame)


def _maximal(cands: set[int]) -> list[int]:
    ordered = sorted(cands, key=lambda m: -m.bit_count())
    keep: list[int] = []
    for c in ordered:
        if not any(c & k == c for k in keep):
            keep.append(c)
    return keep


def _build_lattice(pts, dim, r, vertices, nonextreme, facet_masks, planes, frame) -> FaceLattice:
    top_mask = 0
    for v in vertices:
        top_mask |= 1 << v
    levels: list[list[int]] = [[] for _ in range(r + 2)]
    levels[r + 1] = [top_mask]
    levels[r] = list(facet_masks)
    child_links: list[list[list[int]]] = [[] for _ in range(r + 2)]
    child_links[r + 1] = [list(range(len(facet_masks)))]
    for k in range(r - 1, 0, -1):  # faces of dim k-1 from faces of dim k (level index k+1)
        index: dict[int, int] = {}
        links = []
        for g in levels[k + 1]:
            cands = {g & f for f in facet_masks if g & f != g}
            cands.discard(0)
            kids = []
            for c in _maximal(cands):
                j = index.get(c)
                if j is None:
                    j = index[c] = len(index)
                kids.append(j)
            links.append(kids)
        levels[k] = list(index)
        child_links[k + 1] = links
    levels[0] = [0]
    child_links[1] = [[0] for _ in levels[1]]
    child_links[0] = [[]]

    # canonical order: each level sorted by its vertex tuple
    tuples = [[tuple(_bits(m)) for m in level] for level in levels]
    orders = [sorted(range(len(t)), key=lambda i, t=t: t[i]) for t in tuples]
    position = [{old: new for new, old in enumerate(order)} for order in orders]
    faces = tuple(tuple(tuples[k][i] for i in orders[k]) for k in range(r + 2))
    children = []
    for k in range(r + 2):
        if k == 0:
            children.append(((),))
            continue
        children.append(tuple(tuple(sorted(position[k - 1][j] for j in child_links[k][i])) for i in orders[k]))
    parents_l = [[[] for _ in level] for level in faces]
    for k in range(1, r + 2):
        for i, kids in enumerate(children[k]):
            for j in kids:
                parents_l[k - 1][j].append(i)
    parents = tuple(tuple(tuple(p) for p in level) for level in parents_l)
    facet_planes = tuple(planes[i] for i in orders[r])
    return FaceLattice(
        points=pts,
        ambient_dim=dim,
        intrinsic_dim=r,
        vertices=tuple(vertices),
        nonextreme=tuple(nonextreme),
        faces=faces,
        children=tuple(children),
        parents=parents,
        facet_planes=facet_planes,
        frame=frame,
    )


def f_vector(lat: FaceLattice) -> FVector:
    """Boundary f-vector ``(1, f_0, ..., f_(dim-1))``."""
    return FVector(tuple(len(lat.faces_of_dim(k)) for k in range(-1, lat.intrinsic_dim)))


def _require_full(lat: FaceLattice) -> None:
    if not lat.full_dimensional:
        raise ValueError(
            f"polytope is {lat.intrinsic_dim}-dimensional in E^{lat.ambient_dim}; side tests need a full-dimensional one"
        )


def _side(lat: FaceLattice, idx: int, p: Sequence[Fraction]) -> int:
    s = kernels.dot_int(lat.facet_planes[idx], homogenize(p))
    return (s > 0) - (s < 0)


def classify_point(lat: FaceLattice, facet: Sequence[int] | int, p: Iterable) -> str:
    """``"beyond"``, ``"beneath"`` or ``"on"`` relative to the facet's hyperplane."""
    _require_full(lat)
    idx = lat.facet_index(facet)
    p = make_point(p)
    if len(p) != lat.ambient_dim:
        raise ValueError("point dimension does not match the polytope")
    s = _side(lat, idx, p)
    return BEYOND if s > 0 else BENEATH if s < 0 else ON


def beyond_vertex_point(lat: FaceLattice, facet: Sequence[int] | int, max_halvings: int = 512) -> Point:
    """A point beyond ``facet`` and beneath every other facet.

    Starts at the facet centroid and steps along the outer normal,
    halving the step until every other facet is strictly beneath.
    """
    _require_full(lat)
    idx = lat.facet_index(facet)
    c = centroid([lat.points[i] for i in lat.facets[idx]])
    normal = [Fraction(v) for v in lat.facet_planes[idx][1:]]
    step = Fraction(1)
    for _ in range(max_halvings):
        q = tuple(a + step * b for a, b in zip(c, normal))
        if _side(lat, idx, q) > 0 and all(_side(lat, j, q) < 0 for j in range(len(lat.facets)) if j != idx):
            return q
        step /= 2
    raise RuntimeError("no beyond point found; the lattice is inconsistent")


def star_and_link(lat: FaceLattice, v: int) -> tuple[dict[frozenset, int], dict[frozenset, int]]:
    """Star and link of vertex ``v`` in the boundary complex.

    Both are returned as ``{vertex set: dimension}`` and include the empty face.
    """
    if v not in lat.vertices:
        raise ValueError(f"{v} is not a vertex")
    proper = lat.proper_faces()
    containing = [f for f in proper if v in f]
    star: dict[frozenset, int] = {frozenset(): -1}
    for f in proper:
        if any(f <= g for g in containing):
            star[f] = proper[f]
    link = {f: k for f, k in star.items() if v not in f}
    return star, link


def is_simplicial(lat: FaceLattice, exclude: Iterable[Sequence[int]] = ()) -> bool:
    """True iff every proper face not in ``exclude`` is a simplex."""
    skip = {frozenset(f) for f in exclude}
    return all(len(f) == k + 1 for f, k in lat.proper_faces().items() if f not in skip)


def euler_characteristic(f: FVector) -> int:
    return sum((-1) ** k * f[k] for k in range(f.top + 1))


def random_polytope(d: int, n: int, rng, spread: int = 20) -> VPolytope:
    """n random integer points on the paraboloid ``x_d = |x'|^2``; all of them are vertices."""
    if d < 2:
        raise ValueError("random polytopes need d >= 2")
    if n < d + 1:
        raise ValueError(f"need n >= d+1 = {d + 1}")
    seen: set[tuple[int, ...]] = set()
    while len(seen) < n:
        seen.add(tuple(rng.randint(-spread, spread) for _ in range(d - 1)))
    pts = [x + (sum(c * c for c in x),) for x in sorted(seen)]
    return VPolytope.from_points(pts)
