"""Closed-form face-number bounds for Minkowski sums of two polytopes.

Index convention: ``k`` counts *vertices* of a face, so the functions
here bound ``f_(k-1)`` of the sum.  The command line works with the
0-based face dimension and converts.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .vectors import GVector, HVector, binom, cyclic_f


def _check_params(d: int, n1: int, n2: int) -> None:
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if n1 < d + 1 or n2 < d + 1:
        raise ValueError(f"each summand needs at least d+1={d + 1} vertices, got n1={n1}, n2={n2}")


def minksum_max_faces(d: int, n1: int, n2: int, k: int) -> int:
    """Maximum of ``f_(k-1)(P1 + P2)`` for d-polytopes with n1, n2 vertices, 1 <= k <= d."""
    _check_params(d, n1, n2)
    if not 1 <= k <= d:
        raise ValueError(f"k={k} outside 1..{d}")
    n = n1 + n2
    total = cyclic_f(d + 1, n, k + 1)
    for i in range((d + 1) // 2 + 1):
        total -= binom(d + 1 - i, k + 1 - i) * (binom(n1 - d - 2 + i, i) + binom(n2 - d - 2 + i, i))
    return total


def mink3_vertex_bounds(n1: int, n2: int) -> tuple[int, int, int]:
    """Vertex-parameterised maxima ``(f0, f1, f2)`` for sums of two 3-polytopes."""
    if n1 < 4 or n2 < 4:
        raise ValueError("3-polytopes have at least 4 vertices")
    p = n1 * n2
    return p, 2 * p + n1 + n2 - 8, p + n1 + n2 - 6


def mink3_facet_bounds(m1: int, m2: int) -> tuple[int, int, int]:
    """Facet-parameterised maxima ``(f0, f1, f2)`` for sums of two 3-polytopes."""
    if m1 < 4 or m2 < 4:
        raise ValueError("3-polytopes have at least 4 facets")
    f0 = 4 * m1 * m2 - 8 * m1 - 8 * m2 + 16
    f1 = 8 * m1 * m2 - 17 * m1 - 17 * m2 + 40
    f2 = 4 * m1 * m2 - 9 * m1 - 9 * m2 + 26
    return f0, f1, f2


def trivial_bound_r2(n1: int, n2: int, k: int) -> int:
    """``sum_(j=1..k+1) C(n1, j) C(n2, k+2-j)``: faces spanned by mixed (k+2)-sets."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(binom(n1, j) * binom(n2, k + 2 - j) for j in range(1, k + 2))


def bineighborly_cap(n1: int, n2: int, k: int) -> int:
    """Number of mixed k-subsets ``C(n1+n2, k) - C(n1, k) - C(n2, k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return binom(n1 + n2, k) - binom(n1, k) - binom(n2, k)


def _check_hk(d: int, k: int) -> None:
    if not 0 <= k <= d + 1:
        raise ValueError(f"k={k} outside 0..{d + 1}")


def hF_upper(d: int, n1: int, n2: int, k: int) -> int:
    """Cap on ``h_k(F)``."""
    _check_hk(d, k)
    return binom(n1 + n2 - d - 2 + k, k) - binom(n1 - d - 2 + k, k) - binom(n2 - d - 2 + k, k)


def hF_upper_high(d: int, n1: int, n2: int, k: int) -> int:
    """Cap on ``h_(d+1-k)(F)``."""
    _check_hk(d, k)
    return binom(n1 + n2 - d - 2 + k, k)


def _require_grading(vec, grading: int, name: str) -> None:
    if len(vec) != grading + 1:
        raise ValueError(f"{name} has length {len(vec)}, expected {grading + 1}")


def hF_recurrence_holds(hF: HVector, gP1: GVector, gP2: GVector, n1: int, n2: int, d: int) -> bool:
    """``(k+1) h_(k+1)(F) <= (n1+n2-d-1+k) h_k(F) + n1 g_k(dP2) + n2 g_k(dP1)`` for k = 0..d.

    ``gP1``/``gP2`` may be the short (k <= d/2) or the extended g-vectors;
    entries past their stored range are computed as zero only where that
    is correct, so extended vectors (length d+2) are required.
    """
    _require_grading(hF, d + 1, "h(F)")
    for g, name in ((gP1, "g(dP1)"), (gP2, "g(dP2)")):
        if len(g) != d + 2:
            raise ValueError(f"{name} must be the extended g-vector of length {d + 2}")
    return all(
        (k + 1) * hF[k + 1] <= (n1 + n2 - d - 1 + k) * hF[k] + n1 * gP2[k] + n2 * gP1[k] for k in range(d + 1)
    )


def structural_identity_check(
    hQ: HVector,
    hF: HVector,
    hP1: HVector,
    hP2: HVector,
    hK: HVector,
    hK1: HVector,
    hK2: HVector,
    gP1: GVector,
    gP2: GVector,
) -> bool:
    """All four linear relations between h(dQ), h(F), h(K), h(K_j) and the summands.

    ``gP1``/``gP2`` are extended g-vectors (length d+2, ``g_(d+1) = -1``).
    """
    d = hP1.grading
    _require_grading(hP2, d, "h(dP2)")
    for vec, name in ((hQ, "h(dQ)"), (hF, "h(F)"), (hK, "h(K)"), (hK1, "h(K1)"), (hK2, "h(K2)")):
        _require_grading(vec, d + 1, name)
    for g, name in ((gP1, "g(dP1)"), (gP2, "g(dP2)")):
        if len(g) != d + 2:
            raise ValueError(f"{name} must be the extended g-vector of length {d + 2}")
    for k in range(d + 2):
        if hQ[k] != hF[k] + hP1[k] + hP2[k]:
            return False
        if hK[k] != hF[k] + gP1[k] + gP2[k]:
            return False
        if hK1[k] != hK[k] + hP1[k - 1] or hK2[k] != hK[k] + hP2[k - 1]:
            return False
        if hF[d + 1 - k] != hF[k] + gP1[k] + gP2[k]:
            return False
    return True


@dataclass(frozen=True)
class BoundRow:
    k: int
    bound: int
    attained: int | None = None

    @property
    def face_dim(self) -> int:
        return self.k - 1

    @property
    def equal(self) -> bool | None:
        return None if self.attained is None else self.attained == self.bound


@dataclass(frozen=True)
class BoundReport:
    """Per-k maxima of the sum's face numbers, optionally against attained values."""

    d: int
    n1: int
    n2: int
    rows: tuple[BoundRow, ...]
    extras: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for row in self.rows:
            if row.attained is not None and row.attained > row.bound:
                raise ValueError(f"attained value {row.attained} exceeds the bound {row.bound} at k={row.k}")

    @classmethod
    def build(cls, d: int, n1: int, n2: int, attained=None) -> BoundReport:
        """``attained`` is an optional sequence ``(f_0, ..., f_(d-1))`` of the sum."""
        rows = []
        for k in range(1, d + 1):
            got = None if attained is None else attained[k - 1]
            rows.append(BoundRow(k, minksum_max_faces(d, n1, n2, k), got))
        extras = {}
        if d == 3:
            extras["vertex_based_3d"] = list(mink3_vertex_bounds(n1, n2))
        return cls(d, n1, n2, tuple(rows), extras)

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows)

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "n1": self.n1,
            "n2": self.n2,
            "rows": [
                {"face_dim": r.face_dim, "k": r.k, "bound": r.bound, "attained": r.attained, "equal": r.equal}
                for r in self.rows
            ],
        }
        out.update(self.extras)
        return out

    def to_table(self) -> str:
        has_att = any(r.attained is not None for r in self.rows)
        head = ["face dim (k-1)", "k", "max f_(k-1)"] + (["attained", "equal"] if has_att else [])
        body = []
        for r in self.rows:
            line = [str(r.face_dim), str(r.k), str(r.bound)]
            if has_att:
                line += ["-" if r.attained is None else str(r.attained), str(r.equal)]
            body.append(line)
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        fmt = "  ".join(f"{{:>{w}}}" for w in widths)
        lines = [f"d={self.d} n1={self.n1} n2={self.n2}", fmt.format(*head)]
        lines += [fmt.format(*b) for b in body]
        if "vertex_based_3d" in self.extras:
            f0, f1, f2 = self.extras["vertex_based_3d"]
            lines.append(f"3d vertex-based maxima: f0={f0} f1={f1} f2={f2}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["face_dim", "k", "bound", "attained", "equal"])
        for r in self.rows:
            w.writerow([r.face_dim, r.k, r.bound, "" if r.attained is None else r.attained, "" if r.equal is None else r.equal])
        return buf.getvalue()

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
