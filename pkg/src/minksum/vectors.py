"""f-, h- and g-vector algebra.

Vectors carry their own grading: a d-polytope boundary uses grading d,
the Cayley face set and the auxiliary complexes use grading d+1.  All
indices follow the usual convention, ``f[-1]`` being the empty face.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= b <= a``, except C(a, 0) = 1.

    C(-1, 0) = 1 is what makes g_0 = 1 and h_0(F) = -1 come out right
    for summands with exactly d+1 vertices.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_-1, f_0, ..., f_top)``."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise ValueError("an f-vector needs at least f_-1")
        if self.counts[0] not in (1, -1):
            raise ValueError("f_-1 must be 1 or -1")
        if any(c < 0 for c in self.counts[1:]):
            raise ValueError("face counts must be non-negative")

    @classmethod
    def of(cls, f_minus_1: int, *counts: int) -> FVector:
        return cls((f_minus_1, *counts))

    @property
    def f_minus_1(self) -> int:
        return self.counts[0]

    @property
    def top(self) -> int:
        """Largest face dimension carried by the vector."""
        return len(self.counts) - 2

    def __getitem__(self, k: int) -> int:
        """``f_k``; zero outside the stored range."""
        i = k + 1
        if 0 <= i < len(self.counts):
            return self.counts[i]
        return 0

    def __len__(self):
        return len(self.counts)

    def proper(self) -> tuple[int, ...]:
        """``(f_0, ..., f_top)``."""
        return self.counts[1:]

    def to_json(self) -> dict:
        return {"f_minus_1": self.f_minus_1, "counts": list(self.counts[1:])}

    @classmethod
    def from_json(cls, data: dict) -> FVector:
        return cls((int(data["f_minus_1"]), *map(int, data["counts"])))


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.entries):
            return self.entries[k]
        return 0

    def __len__(self):
        return len(self.entries)

    @property
    def grading(self) -> int:
        return len(self.entries) - 1

    def to_json(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class GVector:
    entries: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.entries):
            return self.entries[k]
        return 0

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


def f_to_h(f: FVector, grading: int) -> HVector:
    """``h_k = sum_i (-1)^(k-i) C(grading-i, grading-k) f_(i-1)`` for k = 0..grading."""
    if len(f) != grading + 1:
        raise ValueError(f"f-vector of length {len(f)} does not match grading {grading}")
    h = []
    for k in range(grading + 1):
        s = 0
        for i in range(k + 1):
            term = binom(grading - i, grading - k) * f[i - 1]
            s += -term if (k - i) % 2 else term
        h.append(s)
    return HVector(tuple(h))


def h_to_f(h: HVector | Sequence[int], grading: int) -> FVector:
    """Inverse of :func:`f_to_h`: ``f_(k-1) = sum_i C(grading-i, k-i) h_i``."""
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    if len(h) != grading + 1:
        raise ValueError(f"h-vector of length {len(h)} does not match grading {grading}")
    return FVector(tuple(sum(binom(grading - i, k - i) * h[i] for i in range(grading + 1)) for k in range(grading + 1)))


def g_from_h(h: HVector, extended: bool = False) -> GVector:
    """``g_0 = h_0``, ``g_k = h_k - h_(k-1)``.

    By default k runs to floor(d/2); ``extended`` runs it to d+1 with
    h_(d+1) = 0, so that g_(d+1-k) = -g_k for Dehn-Sommerville vectors.
    """
    d = h.grading
    top = d + 1 if extended else d // 2
    return GVector(tuple(h[k] - h[k - 1] for k in range(top + 1)))


def dehn_sommerville_check(h: HVector) -> bool:
    d = h.grading
    return all(h[k] == h[d - k] for k in range(d + 1))


def ubt_g_max(d: int, n: int, k: int) -> int:
    """Upper-bound-theorem value of ``g_k`` for a simplicial d-polytope with n vertices."""
    if n < d + 1:
        raise ValueError(f"need n >= d+1, got n={n}, d={d}")
    if not 0 <= k <= d // 2:
        raise ValueError(f"k={k} outside 0..{d // 2}")
    return binom(n - d - 2 + k, k)


def cyclic_h(D: int, n: int) -> HVector:
    """h-vector of the cyclic D-polytope with n vertices."""
    if D < 1 or n <= D:
        raise ValueError(f"cyclic polytope needs n > D >= 1, got D={D}, n={n}")
    h = [0] * (D + 1)
    for i in range(D // 2 + 1):
        h[i] = h[D - i] = binom(n - D - 1 + i, i)
    return HVector(tuple(h))


def cyclic_fvector(D: int, n: int) -> FVector:
    return h_to_f(cyclic_h(D, n), D)


def cyclic_f(D: int, n: int, k: int) -> int:
    """``f_(k-1)`` of the cyclic D-polytope with n vertices, 0 <= k <= D."""
    if not 0 <= k <= D:
        raise ValueError(f"k={k} outside 0..{D}")
    return cyclic_fvector(D, n)[k - 1]


def starred_sum(terms: Sequence, delta: int) -> Fraction:
    """Sum of ``terms[0..floor(delta/2)]`` with the last term halved when delta is even."""
    if len(terms) != delta // 2 + 1:
        raise ValueError(f"need {delta // 2 + 1} terms for delta={delta}, got {len(terms)}")
    vals = [Fraction(t) for t in terms]
    if delta % 2 == 0:
        vals[-1] /= 2
    return sum(vals, Fraction(0))


def cyclic_f_starred(D: int, n: int, k: int) -> Fraction:
    """``f_(k-1)(C_D(n))`` via the halved-last-term closed form."""
    terms = [(binom(D - i, k - i) + binom(i, k - D + i)) * binom(n - D - 1 + i, i) for i in range(D // 2 + 1)]
    return starred_sum(terms, D)


def summation_operator(f: FVector, k: int, delta: int, nu: int) -> int:
    """``S_k(Y; delta, nu) = sum_(i=1..delta) (-1)^(k-i) C(delta-i, delta-k) f_(i-nu)(Y)``."""
    if nu not in (1, 2):
        raise ValueError("nu must be 1 or 2")
    s = 0
    for i in range(1, delta + 1):
        term = binom(delta - i, delta - k) * f[i - nu]
        s += -term if (k - i) % 2 else term
    return s


def appendixB_identity_check(d: int, k: int, alpha: Sequence) -> bool:
    """Exact check of the split-sum / starred-sum identity for one (d, k, alpha)."""
    m = (d + 1) // 2
    if len(alpha) != m + 1:
        raise ValueError(f"need {m + 1} alpha values for d={d}, got {len(alpha)}")
    a = [Fraction(v) for v in alpha]
    lhs = sum((binom(d + 1 - i, k - i) * a[i] for i in range(m + 1)), Fraction(0))
    lhs += sum((binom(i, k - d - 1 + i) * a[i] for i in range(d // 2 + 1)), Fraction(0))
    rhs = starred_sum([(binom(d + 1 - i, k - i) + binom(i, k - d - 1 + i)) * a[i] for i in range(m + 1)], d + 1)
    return lhs == rhs
