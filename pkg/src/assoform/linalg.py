"""Exact dense linear algebra over the rationals.

Matrices store ``fractions.Fraction`` entries row-major and are immutable.
Elimination picks the first nonzero pivot scanning top to bottom, so every
result (RREF, kernel bases) is canonical and deterministic.  Rank has a
fraction-free integer fast path (Bareiss); bases are always reduced
Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QMatrix:
    """Immutable rows x cols matrix of Fractions (entries[i][j])."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("entry grid does not match row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("entry grid does not match column count")

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]


def from_rows(rows, cols: int | None = None) -> QMatrix:
    """Build a QMatrix from an iterable of rows of ints/Fractions.

    ``cols`` is required when ``rows`` is empty.
    """
    grid = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if grid:
        ncols = len(grid[0])
    elif cols is None:
        raise ValueError("column count required for a matrix with no rows")
    else:
        ncols = cols
    return QMatrix(len(grid), ncols, grid)


def identity(n: int) -> QMatrix:
    one, zero = Fraction(1), Fraction(0)
    return QMatrix(n, n, tuple(tuple(one if i == j else zero for j in range(n))
                               for i in range(n)))


def zero_matrix(rows: int, cols: int) -> QMatrix:
    z = Fraction(0)
    return QMatrix(rows, cols, tuple((z,) * cols for _ in range(rows)))


def transpose(m: QMatrix) -> QMatrix:
    return QMatrix(m.cols, m.rows,
                   tuple(tuple(m.entries[i][j] for i in range(m.rows))
                         for j in range(m.cols)))


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = transpose(b)
    grid = tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0))
                       for col in bt.entries)
                 for row in a.entries)
    return QMatrix(a.rows, b.cols, grid)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; row space preserved."""
    rows = [list(r) for r in m.entries]
    rows, pivots = _rref_rows(rows, m.cols)
    grid = tuple(tuple(row) for row in rows)
    return QMatrix(m.rows, m.cols, grid), tuple(pivots)


def row_space_basis(m: QMatrix) -> QMatrix:
    """Canonical basis of the row space: RREF with zero rows dropped."""
    reduced, pivots = rref(m)
    grid = reduced.entries[: len(pivots)]
    return QMatrix(len(pivots), m.cols, grid)


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination; entries stay integers of modest size."""
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        for i in range(rank + 1, nrows):
            f = rows[i][c]
            new = []
            for j in range(c, ncols):
                q, rem = divmod(rows[i][j] * pv - f * rows[rank][j], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                new.append(q)
            rows[i][c:] = new
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(m: QMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    int_rows = []
    for row in m.entries:
        scale = math.lcm(*(x.denominator for x in row))
        int_rows.append([int(x * scale) for x in row])
    return _bareiss_rank(int_rows)


def kernel_basis(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space; empty iff full column rank.

    Standard free-variable construction from the RREF: one vector per
    non-pivot column, with entry 1 there.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.entries[r][free]
        basis.append(tuple(vec))
    return basis


def solve_square(m: QMatrix, rhs) -> tuple[Fraction, ...] | None:
    """Solve m x = rhs for square m; None if m is singular."""
    if m.rows != m.cols:
        raise ValueError("solve_square expects a square matrix")
    n = m.rows
    rows = [list(r) + [Fraction(rhs[i])] for i, r in enumerate(m.entries)]
    rows, pivots = _rref_rows(rows, n)
    if len(pivots) < n:
        return None
    return tuple(rows[i][n] for i in range(n))


def inverse(m: QMatrix) -> QMatrix | None:
    """Exact inverse, or None if singular."""
    if m.rows != m.cols:
        raise ValueError("inverse expects a square matrix")
    n = m.rows
    ident = identity(n)
    rows = [list(m.entries[i]) + list(ident.entries[i]) for i in range(n)]
    rows, pivots = _rref_rows(rows, n)
    if len(pivots) < n:
        return None
    grid = tuple(tuple(row[n:]) for row in rows)
    return QMatrix(n, n, grid)


def det(m: QMatrix) -> Fraction:
    """Determinant by exact elimination."""
    if m.rows != m.cols:
        raise ValueError("det expects a square matrix")
    n = m.rows
    rows = [list(r) for r in m.entries]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def in_row_space(basis: QMatrix, pivots: tuple[int, ...], vector) -> bool:
    """Membership test against an RREF basis with known pivot columns."""
    vec = [Fraction(x) for x in vector]
    for r, pc in enumerate(pivots):
        if vec[pc] != 0:
            f = vec[pc]
            row = basis.entries[r]
            vec = [x - f * y for x, y in zip(vec, row)]
    return all(x == 0 for x in vec)
