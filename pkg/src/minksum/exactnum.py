"""Exact rational scalars, dense rational matrices and determinants.

Scalars are :class:`fractions.Fraction`.  Determinants are computed by
clearing denominators row by row and running fraction-free (Bareiss)
elimination over Python ints; :func:`laplace_expansion` is kept as an
independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from . import kernels

Rational = Fraction

MAX_MATRIX_SIZE = 32


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: every quantity in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Immutable dense rational matrix (row-major)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], max_size: int | None = None) -> Matrix:
        grid = tuple(tuple(as_rational(v) for v in row) for row in rows)
        nrows = len(grid)
        ncols = len(grid[0]) if grid else 0
        cap = MAX_MATRIX_SIZE if max_size is None else max_size
        if nrows > cap or ncols > cap:
            raise ValueError(f"matrix {nrows}x{ncols} exceeds the size cap {cap}")
        return cls(nrows, ncols, grid)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: list[list[str]]) -> Matrix:
        return cls.from_rows(data)


def _integer_rows(entries) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of scales."""
    scale = 1
    out = []
    for row in entries:
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * den) for v in row])
        scale *= den
    return out, scale


def det(m: Matrix) -> Fraction:
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    rows, scale = _integer_rows(m.entries)
    return Fraction(kernels.det_int(rows), scale)


def det_sign(m: Matrix) -> int:
    d = det(m)
    return (d > 0) - (d < 0)


def laplace_expansion(m: Matrix, columns: Sequence[int]) -> Fraction:
    """Determinant by Laplace expansion along the given (0-based) columns.

    Sums ``(-1)^(|r|+|c|) det(S) det(S_bar)`` over every increasing row
    subset ``r`` of the same size as ``columns``.
    """
    if not m.is_square:
        raise ValueError("Laplace expansion needs a square matrix")
    n = m.rows
    cols = tuple(columns)
    if not cols or len(cols) >= n:
        raise ValueError(f"need 1 <= len(columns) < {n}")
    if any(c < 0 or c >= n for c in cols):
        raise ValueError(f"column index out of range 0..{n - 1}")
    if any(b <= a for a, b in zip(cols, cols[1:])):
        raise ValueError("columns must be strictly increasing")
    other_cols = [j for j in range(n) if j not in cols]
    csum = sum(cols)
    total = Fraction(0)
    for r in combinations(range(n), len(cols)):
        other_rows = [i for i in range(n) if i not in r]
        block = det(m.submatrix(r, cols))
        if block == 0:
            continue
        term = block * det(m.submatrix(other_rows, other_cols))
        total += -term if (sum(r) + csum) % 2 else term
    return total


def vandermonde_matrix(x: Sequence) -> Matrix:
    xs = [as_rational(v) for v in x]
    return Matrix.from_rows([[v**i for v in xs] for i in range(len(xs))])


def vandermonde(x: Sequence) -> Fraction:
    """Product formula ``prod_{i<j} (x_j - x_i)``."""
    xs = [as_rational(v) for v in x]
    if len(xs) < 2:
        raise ValueError("Vandermonde determinant needs at least two nodes")
    out = Fraction(1)
    for i, j in combinations(range(len(xs)), 2):
        out *= xs[j] - xs[i]
    return out


def generalized_vandermonde(x: Sequence, mu: Sequence[int]) -> Fraction:
    """``det [x_j ** mu_i]`` for strictly increasing exponents ``mu``."""
    xs = [as_rational(v) for v in x]
    mus = list(mu)
    if len(xs) != len(mus):
        raise ValueError("need as many exponents as nodes")
    if not mus:
        raise ValueError("empty node list")
    if mus[0] < 0 or any(b <= a for a, b in zip(mus, mus[1:])):
        raise ValueError("exponents must satisfy 0 <= mu_1 < mu_2 < ...")
    if any(v <= 0 for v in xs):
        raise ValueError("nodes must be strictly positive")
    return det(Matrix.from_rows([[v**e for v in xs] for e in mus]))


def _check_dkl_args(x, y, tau=None):
    xs = [as_rational(v) for v in x]
    ys = [as_rational(v) for v in y]
    k, l = len(xs), len(ys)
    if k < 2 or l < 2:
        raise ValueError("need k >= 2 and l >= 2")
    if (k + l) % 2 == 0:
        raise ValueError("k + l must be odd")
    for name, seq in (("x", xs), ("y", ys)):
        if seq[0] <= 0 or any(b <= a for a, b in zip(seq, seq[1:])):
            raise ValueError(f"{name} must be positive and strictly increasing")
    if tau is not None and as_rational(tau) <= 0:
        raise ValueError("tau must be positive")
    return xs, ys


def dkl_matrix(x: Sequence, y: Sequence, tau) -> Matrix:
    """The ``(k+l) x (k+l)`` two-block power matrix whose determinant is D_{k,l}(tau).

    Row layout: ones over the x block, ``x*tau``, ones over the y block,
    ``y``, then mixed rows of ``(x*tau)^e | y^e`` for e = 2 .. k+l-3.
    """
    xs, ys = _check_dkl_args(x, y, tau)
    tau = as_rational(tau)
    k, l = len(xs), len(ys)
    zx, zy = [Fraction(0)] * k, [Fraction(0)] * l
    tx = [v * tau for v in xs]
    rows = [
        [Fraction(1)] * k + zy,
        tx + zy,
        zx + [Fraction(1)] * l,
        zx + list(ys),
    ]
    for e in range(2, k + l - 2):
        rows.append([v**e for v in tx] + [v**e for v in ys])
    return Matrix.from_rows(rows)


def dkl_leading_exponent(k: int) -> int:
    return k * (k - 1) // 2


def dkl_leading_coefficient(x: Sequence, y: Sequence) -> Fraction:
    """Coefficient of ``tau^(k(k-1)/2)`` in D_{k,l}(tau): ``VD(x) * GVD(y; 0,1,k,...,k+l-3)``."""
    xs, ys = _check_dkl_args(x, y)
    k, l = len(xs), len(ys)
    exponents = [0, 1] + list(range(k, k + l - 2))
    return vandermonde(xs) * generalized_vandermonde(ys, exponents)


def find_dkl_tau(x: Sequence, y: Sequence, start=1, max_halvings: int = 256) -> Fraction:
    """First tau in ``start, start/2, start/4, ...`` with ``D_{k,l}(tau) > 0``."""
    tau = as_rational(start)
    for _ in range(max_halvings + 1):
        if det(dkl_matrix(x, y, tau)) > 0:
            return tau
        tau /= 2
    raise RuntimeError(f"no positive D_(k,l) found after {max_halvings} halvings")
