"""Neighborliness and bineighborliness of face lattices.

Both predicates enumerate vertex subsets directly and stop at the first
subset that fails to span a simplex face.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .polytope import FaceLattice

Partition = tuple[Sequence[int], Sequence[int]]


def _is_simplex_face(lat: FaceLattice, subset) -> bool:
    return lat.face_dims.get(frozenset(subset)) == len(subset) - 1


def neighborly_counterexample(lat: FaceLattice, k: int) -> tuple[int, ...] | None:
    if k < 1:
        raise ValueError("k must be >= 1")
    for s in combinations(lat.vertices, k):
        if not _is_simplex_face(lat, s):
            return s
    return None


def is_k_neighborly(lat: FaceLattice, k: int) -> bool:
    """Every k vertices span a (k-1)-face."""
    return neighborly_counterexample(lat, k) is None


def _check_partition(lat: FaceLattice, partition: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    v1, v2 = (tuple(sorted(set(p))) for p in partition)
    if not v1 or not v2:
        raise ValueError("both parts of the partition must be non-empty")
    if set(v1) & set(v2):
        raise ValueError("partition parts overlap")
    if set(v1) | set(v2) != set(lat.vertices):
        raise ValueError("partition does not cover the vertex set")
    return v1, v2


def mixed_subsets(v1: Sequence[int], v2: Sequence[int], size: int) -> Iterable[tuple[int, ...]]:
    """All ``size``-subsets meeting both parts, sorted within each tuple."""
    for a in range(1, size):
        b = size - a
        for s1 in combinations(v1, a):
            for s2 in combinations(v2, b):
                yield tuple(sorted(s1 + s2))


def bineighborly_counterexample(lat: FaceLattice, partition: Partition, k: int) -> tuple[int, ...] | None:
    v1, v2 = _check_partition(lat, partition)
    for size in range(2, k + 1):
        for s in mixed_subsets(v1, v2, size):
            if not _is_simplex_face(lat, s):
                return s
    return None


def is_k_bineighborly(lat: FaceLattice, partition: Partition, k: int) -> bool:
    """Every mixed subset of at most k vertices spans a simplex face."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return bineighborly_counterexample(lat, partition, k) is None


def lemma8_check(lat: FaceLattice, partition: Partition, k: int) -> bool:
    """k-bineighborly implies (k-1)-neighborly."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return not is_k_bineighborly(lat, partition, k) or is_k_neighborly(lat, k - 1)


def induced_neighborly(lat: FaceLattice, part: Sequence[int], k: int) -> bool:
    """Every k-subset of ``part`` spans a (k-1)-face of ``lat``."""
    return all(_is_simplex_face(lat, s) for s in combinations(sorted(part), k))


def lemma9_check(lat: FaceLattice, partition: Partition, k: int) -> bool:
    """k-bineighborly with both sides k-neighborly implies k-neighborly."""
    v1, v2 = _check_partition(lat, partition)
    if not (is_k_bineighborly(lat, (v1, v2), k) and induced_neighborly(lat, v1, k) and induced_neighborly(lat, v2, k)):
        return True
    return is_k_neighborly(lat, k)


@dataclass(frozen=True)
class NeighborlinessReport:
    max_k_neighborly: int
    max_k_bineighborly: int
    neighborly_counterexample: tuple[int, ...] | None
    bineighborly_counterexample: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "max_k_neighborly": self.max_k_neighborly,
            "max_k_bineighborly": self.max_k_bineighborly,
            "neighborly_counterexample": None if self.neighborly_counterexample is None else list(self.neighborly_counterexample),
            "bineighborly_counterexample": None
            if self.bineighborly_counterexample is None
            else list(self.bineighborly_counterexample),
        }


def neighborliness_report(lat: FaceLattice, partition: Partition | None = None) -> NeighborlinessReport:
    """Largest k for both predicates, with the first failing subset at k+1."""
    n = len(lat.vertices)
    kn, cex = 1, None
    while kn < n:
        cex = neighborly_counterexample(lat, kn + 1)
        if cex is not None:
            break
        kn += 1
    kb, bcex = 0, None
    if partition is not None:
        v1, v2 = _check_partition(lat, partition)
        kb = 1
        while kb < n:
            bcex = next((s for s in mixed_subsets(v1, v2, kb + 1) if not _is_simplex_face(lat, s)), None)
            if bcex is not None:
                break
            kb += 1
    return NeighborlinessReport(kn, kb, cex, bcex)
