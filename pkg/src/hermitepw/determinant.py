"""Exact determinants of integer-polynomial matrices.

The workhorse is Bareiss fraction-free elimination over Z[x]: every
intermediate entry is a minor of the original matrix, and the division
at each step is exact polynomial division.  Pivots are chosen as the
lowest-degree nonzero entry of the current column to slow intermediate
degree growth.  Small orders go through direct cofactor expansion,
which also serves as the independent oracle in the test suite.
"""

from __future__ import annotations

from .polys import IntPoly

__all__ = ["det", "det_bareiss", "det_cofactor", "DimensionError"]

_COFACTOR_MAX = 3


class DimensionError(ValueError):
    """Raised for non-square (or ragged) determinant input."""


def _check_square(rows):
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"matrix is not square: {n} rows, row of length {len(r)}")
    return n


def det_cofactor(rows):
    """Determinant by cofactor expansion along the first row."""
    n = _check_square(rows)
    if n == 0:
        return IntPoly.const(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = IntPoly()
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * det_cofactor(minor)
        out = out - term if j % 2 else out + term
    return out


def det_bareiss(rows):
    """Determinant by fraction-free (Bareiss) elimination over Z[x]."""
    n = _check_square(rows)
    if n == 0:
        return IntPoly.const(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = IntPoly.const(1)
    for k in range(n - 1):
        pivot_row = None
        best = None
        for i in range(k, n):
            e = m[i][k]
            if not e.is_zero() and (best is None or e.degree < best):
                best = e.degree
                pivot_row = i
        if pivot_row is None:
            return IntPoly()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - lead * row_k[j]).divexact(prev)
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def det(rows):
    """Exact determinant; cofactor expansion up to order 3, Bareiss beyond."""
    n = _check_square(rows)
    if n <= _COFACTOR_MAX:
        return det_cofactor(rows)
    return det_bareiss(rows)
