"""Matrices acting on forms and on exterior vectors, states, and pairings.

Convention: ``g.x_i = sum_j g[j][i] x_j`` (column i of g is the image of x_i),
so ``act(g, act(h, p)) == act(g @ h, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .exterior import ExteriorVector, wedge_from_factors, weight_of
from .linalg import det_fraction, det_poly
from .poly import SPACE, G, Monomial, Polynomial, X, substitute, xvar

Covector = tuple  # tuple of Fractions
Permutation = tuple  # images (q(1), ..., q(r)), 1-based


@dataclass(frozen=True)
class MatrixElement:
    entries: tuple  # r x r tuple of tuples of Polynomials

    @classmethod
    def from_rows(cls, rows) -> "MatrixElement":
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        return cls(tuple(
            tuple(e if isinstance(e, Polynomial) else Polynomial.constant(Fraction(e)) for e in row)
            for row in rows
        ))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def is_numeric(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def numeric(self) -> list:
        return [[e.constant_value() for e in row] for row in self.entries]

    def det(self) -> Polynomial:
        if self.is_numeric():
            return Polynomial.constant(det_fraction(self.numeric()))
        return det_poly([list(row) for row in self.entries])

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Polynomial()
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return MatrixElement.from_rows(rows)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries) + "]"


def identity_matrix(r: int) -> MatrixElement:
    return MatrixElement.from_rows([[int(i == j) for j in range(r)] for i in range(r)])


def symbolic_unipotent(r: int) -> MatrixElement:
    """1 on the diagonal, 0 below, the variable g_ij above."""
    if r < 1:
        raise ValueError("r must be >= 1")
    rows = [[G(i + 1, j + 1) if i < j else Polynomial.constant(int(i == j)) for j in range(r)]
            for i in range(r)]
    return MatrixElement.from_rows(rows)


def symbolic_general(r: int) -> MatrixElement:
    return MatrixElement.from_rows([[G(i + 1, j + 1) for j in range(r)] for i in range(r)])


def check_permutation(q) -> tuple:
    q = tuple(int(x) for x in q)
    if sorted(q) != list(range(1, len(q) + 1)):
        raise ValueError(f"{q} is not a permutation of 1..{len(q)}")
    return q


def permutation_matrix(q: Permutation) -> MatrixElement:
    """Matrix sending x_i to x_{q(i)}."""
    q = check_permutation(q)
    r = len(q)
    rows = [[0] * r for _ in range(r)]
    for i, qi in enumerate(q):
        rows[qi - 1][i] = 1
    return MatrixElement.from_rows(rows)


def all_permutations(r: int) -> list:
    return [tuple(p) for p in permutations(range(1, r + 1))]


def lower_unipotent(r: int, entries: dict) -> MatrixElement:
    """Lower unipotent matrix; ``entries`` maps 1-based (i, j), i > j, to values."""
    rows = [[int(i == j) for j in range(r)] for i in range(r)]
    for (i, j), val in entries.items():
        if not (1 <= j < i <= r):
            raise ValueError(f"({i}, {j}) is not strictly below the diagonal")
        rows[i - 1][j - 1] = val
    return MatrixElement.from_rows(rows)


def upper_unipotent(r: int, entries: dict) -> MatrixElement:
    rows = [[int(i == j) for j in range(r)] for i in range(r)]
    for (i, j), val in entries.items():
        if not (1 <= i < j <= r):
            raise ValueError(f"({i}, {j}) is not strictly above the diagonal")
        rows[i - 1][j - 1] = val
    return MatrixElement.from_rows(rows)


def _images(g: MatrixElement, keep: set | None = None) -> list:
    """g.x_i for each i; with ``keep`` the images are projected onto those x-indices."""
    r = g.size
    out = []
    for i in range(r):
        img = Polynomial()
        for j in range(r):
            if keep is not None and (j + 1) not in keep:
                continue
            e = g.entries[j][i]
            if e:
                img = img + e * X(j + 1)
        out.append(img)
    return out


def _check_space_vars(p: Polynomial, r: int):
    for v in p.variables():
        if v[0] == SPACE and v[1] > r:
            raise ValueError(f"{p} uses x_{v[1]} but the matrix has size {r}")


def act_on_poly(g: MatrixElement, p: Polynomial) -> Polynomial:
    _check_space_vars(p, g.size)
    images = _images(g)
    return substitute(p, {xvar(i + 1): images[i] for i in range(g.size)})


class _MonomialImages:
    """Memoised g.m for monomials m, built from cached powers of g.x_i."""

    def __init__(self, images: list):
        self.images = images
        self.powers: dict = {}
        self.cache: dict = {}

    def power(self, i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in self.powers:
            if e == 1:
                self.powers[key] = self.images[i - 1]
            else:
                self.powers[key] = self.power(i, e - 1) * self.images[i - 1]
        return self.powers[key]

    def __call__(self, m: Monomial) -> Polynomial:
        if m not in self.cache:
            acc = Polynomial.constant(1)
            for v, e in m:
                acc = acc * self.power(v[1], e)
            self.cache[m] = acc
        return self.cache[m]


def act_on_exterior(g: MatrixElement, v: ExteriorVector) -> ExteriorVector:
    """g.v, expanded wedge by wedge; symbolic g gives polynomial coordinates."""
    if g.size != v.r:
        raise ValueError(f"matrix size {g.size} does not match ambient r={v.r}")
    images = _MonomialImages(_images(g))
    total: dict = {}
    for w, c in v.coords.items():
        part = wedge_from_factors([images(m) for m in w], v.r, v.d)
        for tw, tc in part.coords.items():
            s = total.get(tw, Polynomial()) + tc * c
            if s:
                total[tw] = s
            else:
                total.pop(tw, None)
    return ExteriorVector(v.r, v.d, v.b, total)


def transformed_coordinates(g: MatrixElement, v: ExteriorVector, targets: list) -> dict:
    """Coordinates of g.v at the given target wedges only.

    Space variables absent from every target monomial are set to zero before
    expanding g.m, which does not change the coefficients being read.
    """
    if g.size != v.r:
        raise ValueError(f"matrix size {g.size} does not match ambient r={v.r}")
    if not targets:
        return {}
    keep = {var[1] for w in targets for m in w for var, _ in m}
    images = _MonomialImages(_images(g, keep))
    zero = Polynomial()
    out = {tuple(t): Polynomial() for t in targets}
    coeff_cache: dict = {}

    def coeffs(m):
        if m not in coeff_cache:
            coeff_cache[m] = images(m).space_coefficients()
        return coeff_cache[m]

    for w, c in v.coords.items():
        rows = [coeffs(m) for m in w]
        if any(not row for row in rows):
            continue
        for t in out:
            matrix = [[row.get(n, zero) for n in t] for row in rows]
            if any(all(not e for e in line) for line in matrix):
                continue
            val = det_poly(matrix)
            if val:
                out[t] = out[t] + val * c
    return out


def state(v: ExteriorVector) -> set:
    """Weights of the nonzero coordinates of a numeric point."""
    if not v.is_numeric():
        raise ValueError("state is only defined for points with constant coordinates")
    return {weight_of(w, v.r) for w in v.coords}


def permute_character(q: Permutation, chi) -> tuple:
    """Weight of q.m when chi is the weight of m: entry i moves to slot q(i)."""
    out = [0] * len(chi)
    for i, qi in enumerate(q):
        out[qi - 1] = chi[i]
    return tuple(out)


def pair(omega, chi) -> Fraction:
    if len(omega) != len(chi):
        raise ValueError("covector and character lengths differ")
    return sum((Fraction(a) * b for a, b in zip(omega, chi)), Fraction(0))
