"""Exact linear algebra over the integers.

Everything here is fraction-free Bareiss-style elimination: intermediate
entries are integer minors of the input, every division is exact, and no
floating point is involved anywhere.  Ranks, determinants and one-dimensional
kernels of the small structured matrices used elsewhere all come from the same
echelon routine.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]


def row_echelon_ff(mat: IntMatrix) -> tuple[IntMatrix, list[int], int]:
    """Fraction-free row echelon form.

    Returns ``(echelon, pivot_cols, sign)`` where ``sign`` tracks row swaps.
    The input is not modified.  Entries of the echelon form are (up to sign)
    minors of the input bordered by the pivot rows/columns, so the exact
    integer divisions below never truncate.
    """
    a = [list(row) for row in mat]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    pivot_cols: list[int] = []
    r = 0
    prev = 1
    sign = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for i in range(r, n_rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, n_rows):
            coef = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c, n_cols):
                row_i[j] = (piv * row_i[j] - coef * row_r[j]) // prev
        prev = piv
        pivot_cols.append(c)
        r += 1
    return a, pivot_cols, sign


def integer_rank(mat: IntMatrix) -> int:
    """Exact rank over ℚ of an integer matrix."""
    if not mat or not mat[0]:
        return 0
    _, pivot_cols, _ = row_echelon_ff(mat)
    return len(pivot_cols)


def det_bareiss(mat: IntMatrix) -> int:
    """Exact determinant of a square integer matrix; empty matrix gives 1."""
    n = len(mat)
    if n == 0:
        return 1
    if any(len(row) != n for row in mat):
        raise ValueError("determinant of a non-square matrix")
    ech, pivot_cols, sign = row_echelon_ff(mat)
    if len(pivot_cols) < n:
        return 0
    return sign * ech[n - 1][n - 1]


def _primitive(vec: list[Fraction]) -> list[int]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    lcm = 1
    for q in vec:
        d = q.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(q * lcm) for q in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def kernel_vector_if_unique(mat: IntMatrix) -> list[int] | None:
    """Primitive generator of the kernel when the nullity is exactly one.

    ``mat`` rows are equations over the unknown vector.  Returns ``None``
    whenever the kernel is trivial or has dimension greater than one.  The
    sign of the returned generator is arbitrary; callers canonicalize.
    """
    if not mat:
        return None
    n_cols = len(mat[0])
    ech, pivot_cols, _ = row_echelon_ff(mat)
    rank = len(pivot_cols)
    if n_cols - rank != 1:
        return None
    free_col = next(c for c in range(n_cols) if c not in set(pivot_cols))
    x: list[Fraction] = [Fraction(0)] * n_cols
    x[free_col] = Fraction(1)
    for t in range(rank - 1, -1, -1):
        p = pivot_cols[t]
        acc = Fraction(0)
        row = ech[t]
        for j in range(p + 1, n_cols):
            if row[j] and x[j]:
                acc += Fraction(row[j]) * x[j]
        x[p] = -acc / row[p]
    return _primitive(x)
