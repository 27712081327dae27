# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`minksum._kernels`.

Values stay arbitrary-precision Python ints; the gain comes from typed
loop indices and list access without interpreter dispatch.
"""
from fractions import Fraction
from math import gcd


def det_int(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list m, row_k, row_i
    if n == 0:
        return 1
    m = [list(r) for r in rows]
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
        row_k = <list>m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def echelon_int(rows, Py_ssize_t ncols):
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, i, j, p
    cdef list pivots = []
    cdef list row_r, row_i
    prev = 1
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
        row_r = <list>m[r]
        pivot = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            lead = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        pivots.append(c)
        r += 1
    return m, pivots


def rank_int(rows, Py_ssize_t ncols):
    return len(echelon_int(rows, ncols)[1])


def kernel_vector(rows, Py_ssize_t ncols):
    cdef Py_ssize_t r, c, j, f
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
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints) if g > 1 else tuple(ints)


def dot_int(a, b):
    cdef Py_ssize_t i, n = len(a)
    s = 0
    for i in range(n):
        s += a[i] * b[i]
    return s


def side_signs(normal, points):
    cdef Py_ssize_t i, n = len(normal)
    cdef list out = []
    cdef tuple nv = tuple(normal)
    for p in points:
        s = 0
        for i in range(n):
            s += nv[i] * p[i]
        out.append((s > 0) - (s < 0))
    return out
