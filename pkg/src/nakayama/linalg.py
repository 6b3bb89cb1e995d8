"""Exact linear algebra over the integers.

All matrices in this package are small (at most a few hundred entries), so
matrices are plain lists of rows of Python ints and everything is computed
exactly; there is no floating point anywhere.
"""

from __future__ import annotations

Matrix = list[list[int]]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix, *, inner: int | None = None) -> Matrix:
    """Product a @ b.  `inner` disambiguates shapes when a has no rows."""
    if a and inner is not None and len(a[0]) != inner:
        raise ValueError("inner dimension mismatch")
    cols_b = len(b[0]) if b else 0
    out = []
    for row in a:
        if len(row) != len(b):
            raise ValueError("inner dimension mismatch")
        out.append([sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols_b)])
    return out


def is_zero(mat: Matrix) -> bool:
    return all(all(x == 0 for x in row) for row in mat)


def rank(mat: Matrix) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination.

    The one-step Bareiss update keeps every intermediate entry an exact
    integer: after eliminating with pivot p, each entry is divided by the
    previous pivot, and that division is exact.
    """
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r
