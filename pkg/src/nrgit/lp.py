"""Exact two-phase simplex over Q with Bland's rule.

Solves min c.x subject to A x = b, x >= 0, entirely in Fraction arithmetic.
Bland's pivoting rule guarantees termination; exactness at degenerate bases
is the whole point, since the callers classify boundary cases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import rat

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status: str, x: Optional[list[Fraction]] = None,
                 value: Optional[Fraction] = None):
        self.status = status
        self.x = x
        self.value = value


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [v - f * w for v, w in zip(tab[i], tab[row])]
    basis[row] = col


def _run_simplex(tab: list[list[Fraction]], basis: list[int], n_vars: int) -> str:
    """Minimize the cost row (last row) over the tableau; Bland's rule."""
    m = len(tab) - 1
    while True:
        cost = tab[m]
        enter = None
        for j in range(n_vars):
            if cost[j] < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tab, basis, leave, enter)


def solve_lp(a: Sequence[Sequence], b: Sequence, c: Sequence) -> LPResult:
    """min c.x s.t. a x = b, x >= 0 (exact)."""
    a = [[rat(x) for x in row] for row in a]
    b = [rat(x) for x in b]
    c = [rat(x) for x in c]
    m = len(a)
    n = len(c)
    for row in a:
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    # Phase 1: nonnegative rhs, artificial basis.
    rows = []
    for i in range(m):
        if b[i] < 0:
            rows.append(([-x for x in a[i]], -b[i]))
        else:
            rows.append((list(a[i]), b[i]))
    total = n + m
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    for i, (row, rhs) in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(row + art + [rhs])
        basis.append(n + i)
    cost = [Fraction(0)] * (total + 1)
    for j in range(n):
        s = Fraction(0)
        for row, _ in rows:
            s += row[j]
        cost[j] = -s
    cost[-1] = -sum(rhs for _, rhs in rows)
    tab.append(cost)
    status = _run_simplex(tab, basis, total)
    if status != OPTIMAL or tab[m][-1] != 0:
        return LPResult(INFEASIBLE)
    # Drive artificials out of the basis; a row with no real pivot is redundant.
    drop_rows = []
    for i in range(m):
        if basis[i] >= n:
            piv = None
            for j in range(n):
                if tab[i][j] != 0:
                    piv = j
                    break
            if piv is None:
                drop_rows.append(i)
            else:
                _pivot(tab, basis, i, piv)
    if drop_rows:
        tab = [row for i, row in enumerate(tab[:-1]) if i not in drop_rows] + [tab[-1]]
        basis = [bv for i, bv in enumerate(basis) if i not in drop_rows]
        m = len(basis)
    # Phase 2: real costs, artificial columns frozen out.
    tab = [row[:n] + [row[-1]] for row in tab[:-1]]
    cost2 = list(c) + [Fraction(0)]
    for i, bv in enumerate(basis):
        if cost2[bv] != 0:
            f = cost2[bv]
            cost2 = [v - f * w for v, w in zip(cost2, tab[i])]
    tab.append(cost2)
    status = _run_simplex(tab, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = tab[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, value)


def feasible(a: Sequence[Sequence], b: Sequence, n_vars: int) -> Optional[list[Fraction]]:
    """A nonnegative solution of a x = b, or None."""
    res = solve_lp(a, b, [Fraction(0)] * n_vars)
    return res.x if res.status == OPTIMAL else None
