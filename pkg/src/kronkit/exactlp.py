"""Exact rational linear programming.

A small two-phase primal simplex over :class:`fractions.Fraction`, with
Bland's anti-cycling rule.  It exists so that redundancy of inequalities can
be decided exactly at desk scale — no floating-point tolerances, no external
solver.  Problem sizes here are tiny (a dozen or two variables and
constraints), so the dense tableau is perfectly adequate.

Solves::

    minimize    c · x
    subject to  A_ub x ≤ b_ub
                A_eq x = b_eq
                x free

and reports one of the statuses ``"optimal"``, ``"unbounded"``,
``"infeasible"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction]


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None
    x: tuple[Fraction, ...] | None


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for i, r in enumerate(tab):
        if i != row and r[col] != 0:
            coef = r[col]
            tab[i] = [a - coef * b for a, b in zip(r, tab[row])]
    basis[row] = col


def _simplex(tab: list[list[Fraction]], basis: list[int], n_cols: int) -> str:
    """Minimize the objective stored in the last tableau row; Bland's rule."""
    while True:
        obj = tab[-1]
        col = next((j for j in range(n_cols) if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best_ratio: Fraction | None = None
        row = None
        for i in range(len(tab) - 1):
            if tab[i][col] > 0:
                ratio = tab[i][-1] / tab[i][col]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[row])
                ):
                    best_ratio = ratio
                    row = i
        if row is None:
            return "unbounded"
        _pivot(tab, basis, row, col)


def solve_lp(
    c: Row,
    a_ub: Sequence[Row],
    b_ub: Row,
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> LPResult:
    """Exact two-phase simplex; see module docstring for the problem form."""
    n = len(c)
    c = [Fraction(v) for v in c]
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    n_slack = len(a_ub)
    for idx, (arow, b) in enumerate(zip(a_ub, b_ub)):
        r = [Fraction(v) for v in arow] + [Fraction(0)] * n_slack
        r[n + idx] = Fraction(1)
        rows.append(r)
        rhs.append(Fraction(b))
    for arow, b in zip(a_eq, b_eq):
        rows.append([Fraction(v) for v in arow] + [Fraction(0)] * n_slack)
        rhs.append(Fraction(b))

    # split free variables x = u − v, both nonnegative
    def expand(row: list[Fraction]) -> list[Fraction]:
        return [*row[:n], *(-v for v in row[:n]), *row[n:]]

    rows = [expand(r) for r in rows]
    n_struct = 2 * n + n_slack

    # normalize to b ≥ 0, then add one artificial per row
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    n_rows = len(rows)
    tab: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        art = [Fraction(0)] * n_rows
        art[i] = Fraction(1)
        tab.append(r + art + [rhs[i]])
    basis = [n_struct + i for i in range(n_rows)]

    # phase 1: minimize the sum of artificials
    width = n_struct + n_rows
    phase1 = [Fraction(0)] * (width + 1)
    for j in range(n_struct, width):
        phase1[j] = Fraction(1)
    tab.append(phase1)
    for i in range(n_rows):  # price out the artificial basis
        tab[-1] = [a - b for a, b in zip(tab[-1], tab[i])]
    status = _simplex(tab, basis, width)
    if status != "optimal" or tab[-1][-1] != 0:
        return LPResult("infeasible", None, None)
    tab.pop()

    # drive any residual artificial variables out of the basis
    for i in range(n_rows):
        if basis[i] >= n_struct:
            col = next((j for j in range(n_struct) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    live = [i for i in range(n_rows) if basis[i] < n_struct or tab[i][-1] == 0]
    tab = [tab[i] for i in live]
    basis = [basis[i] for i in live]
    n_rows = len(tab)

    # phase 2 with the real objective (on the split variables)
    obj = [*c, *(-v for v in c)] + [Fraction(0)] * (width - 2 * n) + [Fraction(0)]
    tab.append(obj)
    for i in range(n_rows):
        coef = tab[-1][basis[i]]
        if coef != 0:
            tab[-1] = [a - coef * b for a, b in zip(tab[-1], tab[i])]
    status = _simplex(tab, basis, n_struct)
    if status == "unbounded":
        return LPResult("unbounded", None, None)
    solution = [Fraction(0)] * n_struct
    for i in range(n_rows):
        if basis[i] < n_struct:
            solution[basis[i]] = tab[i][-1]
    x = tuple(solution[j] - solution[n + j] for j in range(n))
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, x)
