"""Pure-Python integer kernels.

These are the inner loops behind every exact predicate in the package:
fraction-free elimination over Python ints and batched hyperplane sign
evaluation.  ``minksum._ckernels`` is a Cython build of the same
routines; :mod:`minksum.kernels` picks whichever is importable.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def det_int(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def echelon_int(rows, ncols):
    """Fraction-free row echelon form.

    Returns ``(matrix, pivot_columns)``; rows past ``len(pivot_columns)``
    are zero.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            lead = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        pivots.append(c)
        r += 1
    return m, pivots


def rank_int(rows, ncols):
    return len(echelon_int(rows, ncols)[1])


def kernel_vector(rows, ncols):
    """Primitive integer generator of a one-dimensional right kernel.

    Raises ``ValueError`` when the kernel is not exactly one-dimensional.
    """
    m, pivots = echelon_int(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"kernel dimension is {len(free)}, expected 1")
    f = free[0]
    x = [Fraction(0)] * ncols
    x[f] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = m[r]
        acc = Fraction(0)
        for j in range(c + 1, ncols):
            if row[j]:
                acc += row[j] * x[j]
        x[c] = -acc / row[c]
    return _primitive(x)


def _primitive(x):
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g > 1 else tuple(ints)


def dot_int(a, b):
    s = 0
    for i in range(len(a)):
        s += a[i] * b[i]
    return s


def side_signs(normal, points):
    """Signs of ``normal . p`` for each homogeneous integer point ``p``."""
    out = []
    n = len(normal)
    for p in points:
        s = 0
        for i in range(n):
            s += normal[i] * p[i]
        out.append((s > 0) - (s < 0))
    return out
