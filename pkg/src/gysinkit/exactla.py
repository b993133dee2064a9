"""Exact linear algebra over the rationals.

Entries are Python ``int`` or :class:`fractions.Fraction`; both are exact
rationals in canonical form.  Vectors are tuples, matrices act on column
vectors, so a map ``V -> W`` has shape ``(dim W, dim V)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from ._backend import rref_int

Vector = tuple


class DimensionMismatchError(ValueError):
    pass


def _normalize(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _normalize(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


class RationalMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(_normalize(x) for x in entries)
        if rows < 0 or cols < 0:
            raise DimensionMismatchError("negative shape")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RationalMatrix:
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatchError("column of wrong length")
        return cls(rows, len(columns), (c[i] for i in range(rows) for c in columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.rows else ()

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows,
                              (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.column_list()
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), 0))
            return RationalMatrix(self.rows, other.cols, out)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatchError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(_normalize(sum((a * b for a, b in zip(self.row(i), v) if a and b), 0))
                     for i in range(self.rows))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, (c * a for a in self.entries))

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        return RationalMatrix.from_columns(self.column_list() + other.column_list(), self.rows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix.from_rows({[list(map(str, r)) for r in self.row_list()]!r})"


def _int_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den == 1:
            out.append([int(x) for x in r])
        else:
            out.append([int(x * den) for x in r])
    return out


def echelon(m: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Integer reduced row echelon form of ``m``: ``(rows, pivot columns)``."""
    return rref_int(_int_rows(m.row_list()), m.cols)


def rank(m: RationalMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.rows < m.cols:
        m = m.transpose()
    return len(echelon(m)[1])


def kernel_basis(m: RationalMatrix) -> list[Vector]:
    """Basis of the null space, one vector per free column, in column order."""
    n = m.cols
    if m.rows == 0:
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rows, pivots = echelon(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [0] * n
        v[f] = 1
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = _normalize(Fraction(-row[f], row[p]))
        basis.append(tuple(v))
    return basis


def column_space_basis(columns: Sequence[Vector], length: int) -> list[Vector]:
    """Greedy basis of the span of ``columns``: keeps the first column of each
    rank increase, so the choice is deterministic in input order."""
    if not columns:
        return []
    m = RationalMatrix.from_columns(columns, length)
    _, pivots = echelon(m)
    return [tuple(columns[j]) for j in pivots]


def eigenspace_dims(m: RationalMatrix, eigenvalue) -> int:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"eigenspace of non-square {m.shape} matrix")
    shifted = m - RationalMatrix.identity(m.rows).scale(_normalize(eigenvalue))
    return m.cols - rank(shifted)


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix | None:
    """Solve ``a @ x = b`` for ``x``; ``None`` if some column of ``b`` is not
    in the column space of ``a``.  Free variables are set to zero."""
    if a.rows != b.rows:
        raise DimensionMismatchError(f"solve: {a.shape} against {b.shape}")
    n, k = a.cols, b.cols
    if a.rows == 0:
        return RationalMatrix.zeros(n, k)
    aug = [list(ra) + list(rb) for ra, rb in zip(a.row_list(), b.row_list())]
    rows, pivots = rref_int(_int_rows(aug), n + k)
    if pivots and pivots[-1] >= n:
        return None
    x = [[0] * k for _ in range(n)]
    for row, p in zip(rows, pivots):
        for j in range(k):
            if row[n + j]:
                x[p][j] = _normalize(Fraction(row[n + j], row[p]))
    return RationalMatrix(n, k, (v for r in x for v in r))
