"""Exact linear algebra over the rationals.

Everything in this package that touches matrix rank, kernels or affine hulls
must stay exact, so the routines here work on lists of ``Fraction`` rows and
never round.  Inputs are small (desk scale), so plain Gaussian elimination is
the right tool.
"""

from __future__ import annotations

from fractions import Fraction

Row = tuple[Fraction, ...]


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; reject floats (inexact)."""
    if isinstance(x, float):
        raise ValueError("floating point values are not allowed; use rationals")
    if isinstance(x, bool):
        raise ValueError("booleans are not rational numbers")
    return Fraction(x)


def row_echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form (in place on a copy)."""
    mat = [list(r) for r in rows]
    if not mat:
        return mat
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(mat):
            break
        pivot = next((r for r in range(pivot_row, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = Fraction(1) / mat[pivot_row][col]
        mat[pivot_row] = [v * inv for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
    return mat


def rank(rows) -> int:
    mat = row_echelon([list(map(Fraction, r)) for r in rows])
    return sum(1 for row in mat if any(v != 0 for v in row))


def nullspace(rows, ncols: int) -> list[Row]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    mat = row_echelon([list(map(Fraction, r)) for r in rows])
    mat = [row for row in mat if any(v != 0 for v in row)]
    pivot_cols = []
    for row in mat:
        pivot_cols.append(next(i for i, v in enumerate(row) if v != 0))
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pcol in zip(mat, pivot_cols):
            vec[pcol] = -row[free]
        basis.append(tuple(vec))
    return basis


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat_vec(rows, vec) -> list[Fraction]:
    return [dot(row, vec) for row in rows]
