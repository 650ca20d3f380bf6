"""Small exact linear algebra helpers over Fractions and polynomial entries."""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial


def rref(rows: list) -> tuple[list, list]:
    """Reduced row echelon form of a rational matrix.

    Returns ``(nonzero_rows, pivot_columns)``.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: list, ncols: int) -> list:
    """Basis of the right kernel of a rational matrix."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def rank(rows: list) -> int:
    return len(rref(rows)[0]) if rows else 0


def det_fraction(matrix: list) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result


def det_poly(matrix: list) -> Polynomial:
    """Determinant of a square matrix of Polynomials by Laplace expansion.

    Zero entries are skipped, so sparse matrices stay cheap.
    """
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(1)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if all(e.is_constant() for row in matrix for e in row):
        return Polynomial.constant(det_fraction([[e.constant_value() for e in row] for row in matrix]))
    # expand along the sparsest row
    ri = min(range(n), key=lambda i: sum(1 for e in matrix[i] if e))
    total = Polynomial()
    for j, e in enumerate(matrix[ri]):
        if not e:
            continue
        minor = [row[:j] + row[j + 1:] for k, row in enumerate(matrix) if k != ri]
        term = e * det_poly(minor)
        total = total - term if (ri + j) % 2 else total + term
    return total
