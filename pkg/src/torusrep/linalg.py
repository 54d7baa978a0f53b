"""Exact linear algebra over the rationals.

Small dense matrices only (rank <= ~10 in practice), so plain Gaussian
elimination on lists of Fractions is all we need.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction


def _echelonize(rows: list[list[Fraction]]) -> list[int]:
    """Reduce ``rows`` in place to row echelon form, return pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(rows):
            break
        pivot = next((k for k in range(row, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for k in range(len(rows)):
            if k != row and rows[k][col] != 0:
                factor = rows[k][col]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[row])]
        pivots.append(col)
        row += 1
    return pivots


def rank(matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix]
    return len(_echelonize(rows))


def int_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Equivalent to ``rank`` but stays in integer arithmetic, which matters
    when classifying large sweeps of candidate matrices.
    """
    rows = [list(map(int, row)) for row in matrix]
    if not rows:
        return 0
    n, m = len(rows), len(rows[0])
    rk = 0
    prev = 1
    for col in range(m):
        pivot = next((k for k in range(rk, n) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        for k in range(rk + 1, n):
            for c in range(col + 1, m):
                rows[k][c] = (rows[rk][col] * rows[k][c] - rows[k][col] * rows[rk][c]) // prev
            rows[k][col] = 0
        prev = rows[rk][col]
        rk += 1
        if rk == n:
            break
    return rk


def solve(matrix, rhs) -> list[Fraction] | None:
    """One exact solution of ``matrix @ x = rhs`` (free variables set to 0).

    Returns None when the system is inconsistent.
    """
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(rows[0]) - 1
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(rows):
            break
        pivot = next((k for k in range(row, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for k in range(len(rows)):
            if k != row and rows[k][col] != 0:
                factor = rows[k][col]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[row])]
        pivots.append(col)
        row += 1
    for k in range(row, len(rows)):
        if rows[k][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = rows[r][ncols]
    return solution


def nullspace(matrix) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = _echelonize(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -rows[r][free]
        basis.append(vec)
    return basis
