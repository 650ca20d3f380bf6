"""Exact rational LP feasibility by the two-phase simplex method with Bland's rule."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list | None:
    """A point x >= 0 with A x = b, or None if there is none.

    Phase one of the simplex method on the artificial problem
    ``min sum(a) s.t. A x + a = b, x, a >= 0``; Bland's rule (smallest index
    enters, smallest basic index leaves on ties) rules out cycling.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs of the phase-one objective
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for k in range(n):
            cost[k] -= row[k]
        cost[width] -= row[width]

    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction cannot occur for a phase-one objective bounded below by 0
            raise ArithmeticError("phase-one problem reported unbounded")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [a - f * c for a, c in zip(cost, rows[leave])]
        basis[leave] = enter

    if -cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, k in enumerate(basis):
        if k < n:
            x[k] = rows[i][width]
    return x


def convex_combination(points: Sequence[Sequence], target: Sequence) -> list | None:
    """Weights lambda >= 0 summing to 1 with sum(lambda_i * p_i) == target, or None."""
    points = [list(p) for p in points]
    if not points:
        return None
    dim = len(target)
    if any(len(p) != dim for p in points):
        raise ValueError("points and target have different lengths")
    A = [[p[k] for p in points] for k in range(dim)]
    A.append([1] * len(points))
    return feasible_point(A, list(target) + [1])
