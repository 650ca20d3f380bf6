"""Reduction from polynomial-system solvability to the state-avoidance problem SC.

A system p_0..p_{l-3} in x_2..x_r is turned into a rational point of
Lambda^2 S_{2l+d} in r+1 variables and the character chi_1^{2d+2l} chi_{r+1}^{2l};
an upper unipotent coordinate change removes that character from the state
exactly when the system has a common zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .action import MatrixElement, upper_unipotent
from .exterior import Character, ExteriorVector, wedge_from_factors
from .hilbert import UPoly, binomial_poly, upoly_add, upoly_neg
from .poly import SPACE, G, Monomial, Polynomial, X, binomial, gvar, parse_poly, substitute, xvar


@dataclass(frozen=True)
class PolySystem:
    r: int
    polys: tuple

    def __post_init__(self):
        polys = tuple(parse_poly(p) if isinstance(p, str) else p for p in self.polys)
        object.__setattr__(self, "polys", polys)
        if self.r < 2:
            raise ValueError("the system lives in x_2..x_r, so r must be >= 2")
        if not polys:
            raise ValueError("need at least one polynomial (l >= 3)")
        for p in polys:
            for v in p.variables():
                if v[0] != SPACE or not 2 <= v[1] <= self.r:
                    raise ValueError(f"{p} must be a polynomial in x_2..x_{self.r}")

    @property
    def l(self) -> int:
        return len(self.polys) + 2

    @property
    def d(self) -> int:
        return max(0, max(p.degree for p in self.polys))

    def to_dict(self) -> dict:
        return {"r": self.r, "polys": [str(p) for p in self.polys]}

    @classmethod
    def from_dict(cls, data: dict) -> "PolySystem":
        return cls(int(data["r"]), tuple(data["polys"]))


def _check_point(point: ExteriorVector):
    if point.is_zero():
        raise ValueError("the point must be nonzero")
    if not point.is_numeric():
        raise ValueError("the point must have rational coordinates")


@dataclass(frozen=True)
class SCInstance:
    point: ExteriorVector
    character: Character

    def __post_init__(self):
        _check_point(self.point)
        object.__setattr__(self, "character", tuple(int(c) for c in self.character))
        if len(self.character) != self.point.r:
            raise ValueError("character length differs from the ambient r")

    @property
    def ambient(self) -> tuple:
        return self.point.ambient

    def to_dict(self) -> dict:
        out = self.point.to_dict()
        out["character"] = list(self.character)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SCInstance":
        return cls(ExteriorVector.from_dict(data), tuple(data["character"]))


@dataclass(frozen=True)
class ESCInstance:
    point: ExteriorVector
    characters: tuple

    def __post_init__(self):
        _check_point(self.point)
        chars = tuple(sorted({tuple(int(c) for c in chi) for chi in self.characters}))
        if not chars:
            raise ValueError("the character set must be nonempty")
        if any(len(chi) != self.point.r for chi in chars):
            raise ValueError("character length differs from the ambient r")
        object.__setattr__(self, "characters", chars)

    @property
    def ambient(self) -> tuple:
        return self.point.ambient

    def to_dict(self) -> dict:
        out = self.point.to_dict()
        out["characters"] = [list(chi) for chi in self.characters]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ESCInstance":
        return cls(ExteriorVector.from_dict(data), tuple(tuple(c) for c in data["characters"]))


def falling_factorial(n: int, k: int) -> int:
    """n! / (n-k)!"""
    return factorial(n) // factorial(n - k)


def alternating_sum(l: int, j: int) -> int:
    """sum_{a=0}^{l-1-j} (-1)^a C(2l-1-j, a); never zero, sign (-1)^(l-1-j)."""
    if l < 1 or not 0 <= j <= l - 1:
        raise ValueError(f"need l >= 1 and 0 <= j <= l-1, got l={l}, j={j}")
    n = 2 * l - 1 - j
    return sum((-1) ** a * binomial(n, a) for a in range(l - j))


def leading_constant(l: int, j: int) -> int:
    """Coefficient of g_{1,r+1}^{2l-1} in pi_j."""
    return falling_factorial(2 * l - 1, j) * alternating_sum(l, j)


def tilde(p: Polynomial, r: int) -> Polynomial:
    """p(1, g_12, ..., g_1r)."""
    assignment = {xvar(1): Polynomial.constant(1)}
    for k in range(2, r + 1):
        assignment[xvar(k)] = G(1, k)
    return substitute(p, assignment)


def homogenize(p: Polynomial, d: int) -> Polynomial:
    """Pad every term of p with x_1 up to degree d."""
    terms = []
    for m, c in p.terms.items():
        e = m.degree
        if e > d:
            raise ValueError(f"{p} has degree {e} > {d}")
        terms.append((m * Monomial({xvar(1): d - e}), c))
    return Polynomial(terms)  # colliding terms are summed


def build_psi(system: PolySystem) -> list:
    """psi_0..psi_{l-1}: psi_i = -leading_constant(l, i) (+ x_1^{d-deg} p_{i-2} for i >= 2)."""
    l, d = system.l, system.d
    psi = []
    for i in range(l):
        base = Polynomial.constant(-leading_constant(l, i))
        if i >= 2:
            p = system.polys[i - 2]
            if p:
                base = base + X(1) ** (d - p.degree) * p
        psi.append(base)
    return psi


def build_F(psi: Sequence[Polynomial]) -> list:
    l = len(psi)
    if l < 1:
        raise ValueError("psi must be nonempty")
    F = [p / factorial(i) for i, p in enumerate(psi)]
    F += [Polynomial() for _ in range(l, 2 * l - 1)]
    F.append(Polynomial.constant(1))
    return F


def _check_F(F: Sequence[Polynomial], r: int):
    if len(F) % 2 or not F:
        raise ValueError("F must have even positive length 2l")
    for f in F:
        for v in f.variables():
            if v[0] != SPACE or v[1] > r:
                raise ValueError(f"F entry {f} must be a polynomial in x_1..x_{r}")


def point_factors(F: Sequence[Polynomial], r: int, d: int) -> tuple[Polynomial, Polynomial]:
    """The two degree-(2l+d) forms whose wedge is the point."""
    _check_F(F, r)
    l = len(F) // 2
    x1, y = X(1), X(r + 1)
    first, second = Polynomial(), Polynomial()
    for i, f in enumerate(F):
        if not f:
            continue
        h = homogenize(f, d)
        first = first + y ** i * x1 ** (2 * l - i) * h
        second = second + y ** (i + 1) * x1 ** (2 * l - i - 1) * h
    return first, second


def build_point(F: Sequence[Polynomial], r: int, d: int) -> ExteriorVector:
    """The point of Lambda^2 S_{2l+d} in x_1..x_{r+1} built from F."""
    l = len(F) // 2
    first, second = point_factors(F, r, d)
    return wedge_from_factors([first, second], r + 1, 2 * l + d)


def f_polys(F: Sequence[Polynomial], r: int, l: int | None = None, d: int | None = None) -> list:
    """f_{a} for a = 0..l-1, polynomials in g_12..g_1r and t = g_{1,r+1}."""
    _check_F(F, r)
    if l is None:
        l = len(F) // 2
    if len(F) != 2 * l:
        raise ValueError("F must have length 2l")
    t = G(1, r + 1)
    Ft = [tilde(f, r) for f in F]
    out = []
    for a in range(l):
        total = Polynomial()
        for i in range(2 * l):
            if not Ft[i]:
                continue
            for j in range(i, 2 * l):
                if not Ft[j]:
                    continue
                if i == j:
                    c = binomial(i, a) * binomial(i, 2 * l - a - 1)
                else:
                    c = (binomial(i, a) * binomial(j, 2 * l - a - 1)
                         + binomial(i, 2 * l - a - 1) * binomial(j, a))
                if not c:
                    continue
                e = i + j - 2 * l + 1
                assert e >= 0
                total = total + (Ft[i] * Ft[j] * t ** e).scale(c)
        out.append(total)
    return out


def pi_polys(psi: Sequence[Polynomial], r: int, l: int | None = None, d: int | None = None) -> list:
    if l is None:
        l = len(psi)
    if len(psi) != l:
        raise ValueError("psi must have length l")
    t = G(1, r + 1)
    return [t ** (2 * l - 1) * leading_constant(l, j) + tilde(psi[j], r) * t ** j for j in range(l)]


def target_character(r: int, l: int, d: int) -> Character:
    if l < 3 or r < 2 or d < 0:
        raise ValueError("need l >= 3, r >= 2, d >= 0")
    return (2 * d + 2 * l,) + (0,) * (r - 1) + (2 * l,)


def target_wedge(r: int, l: int, d: int, a: int) -> tuple:
    """x_1^{2l+d-a} x_{r+1}^a ^ x_1^{d+a} x_{r+1}^{2l-a}."""
    y = xvar(r + 1)
    return (Monomial({xvar(1): 2 * l + d - a, y: a}), Monomial({xvar(1): d + a, y: 2 * l - a}))


def reduce_sysal_to_sc(system: PolySystem) -> SCInstance:
    F = build_F(build_psi(system))
    point = build_point(F, system.r, system.d)
    return SCInstance(point, target_character(system.r, system.l, system.d))


def witness_from_root(system: PolySystem, root: Sequence) -> MatrixElement:
    """Upper unipotent matrix with first row (1, root..., 1), zero elsewhere above the diagonal."""
    r = system.r
    root = [Fraction(x) for x in root]
    if len(root) != r - 1:
        raise ValueError(f"root must give values for x_2..x_{r}")
    values = {xvar(k + 2): Polynomial.constant(v) for k, v in enumerate(root)}
    for p in system.polys:
        if substitute(p, values):
            raise ValueError(f"{list(map(str, root))} is not a root of {p}")
    entries = {(1, k + 2): v for k, v in enumerate(root)}
    entries[(1, r + 1)] = 1
    return upper_unipotent(r + 1, entries)


def witness_assignment(u: MatrixElement) -> dict:
    """Assignment g_ij -> u[i][j] for the strictly upper entries of u."""
    n = u.size
    return {gvar(i + 1, j + 1): u.entries[i][j] for i in range(n) for j in range(i + 1, n)}


def hilbert_polynomial_of_point(r: int, l: int, d: int) -> UPoly:
    """C(r+t, r) - C(r+t-2l-d+1, r) + C(r+t-2l-d-1, r-2) as coefficients in t."""
    if r < 2:
        raise ValueError("need r >= 2")
    out = binomial_poly(r, r)
    out = upoly_add(out, upoly_neg(binomial_poly(r - 2 * l - d + 1, r)))
    out = upoly_add(out, binomial_poly(r - 2 * l - d - 1, r - 2))
    return out
