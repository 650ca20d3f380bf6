"""Wedge basis of the b-th exterior power of degree-d forms and its coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import det_poly
from .poly import SPACE, Monomial, Polynomial, lex_key, monomials_of_degree, parse_poly, binomial

Character = tuple  # tuple of ints, one exponent per chi_i
WedgeIndex = tuple  # tuple of Monomials, strictly lex-decreasing


def wedge_basis(r: int, d: int, b: int) -> list:
    """All strictly decreasing b-tuples of degree-d monomials in x_1..x_r."""
    mons = monomials_of_degree(r, d)
    if not 0 < b <= len(mons):
        raise ValueError(f"b={b} out of range 1..{len(mons)} for r={r}, d={d}")
    return list(combinations(mons, b))


def wedge_basis_size(r: int, d: int, b: int) -> int:
    return binomial(binomial(r + d - 1, d), b)


def weight_of(w: WedgeIndex, r: int | None = None) -> Character:
    if r is None:
        r = max((v[1] for m in w for v, _ in m), default=1)
    total = [0] * r
    for m in w:
        for i, e in enumerate(m.exponent_vector(r)):
            total[i] += e
    return tuple(total)


def wedges_of_weight(r: int, d: int, b: int, chi: Character) -> list:
    """Basis wedges whose weight equals ``chi``, in basis order."""
    chi = tuple(chi)
    if len(chi) != r or sum(chi) != d * b or min(chi) < 0:
        return []
    mons = [m for m in monomials_of_degree(r, d)
            if all(a <= c for a, c in zip(m.exponent_vector(r), chi))]
    vecs = [m.exponent_vector(r) for m in mons]
    out = []

    def rec(start, left, remaining, chosen):
        if left == 0:
            if not any(remaining):
                out.append(tuple(chosen))
            return
        for k in range(start, len(mons)):
            v = vecs[k]
            if all(a <= c for a, c in zip(v, remaining)):
                rec(k + 1, left - 1, tuple(c - a for a, c in zip(v, remaining)), chosen + [mons[k]])

    rec(0, b, chi, [])
    return out


def _check_wedge(w, r, d, b):
    if len(w) != b:
        raise ValueError(f"wedge {w} has {len(w)} factors, expected {b}")
    for m in w:
        if m.degree != d or any(v[0] != SPACE or v[1] > r for v, _ in m):
            raise ValueError(f"wedge factor {m} is not a degree-{d} monomial in x_1..x_{r}")
    keys = [lex_key(m) for m in w]
    if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
        raise ValueError(f"wedge factors {w} are not strictly lex-decreasing")


@dataclass(frozen=True)
class ExteriorVector:
    """A vector of the b-th exterior power of the degree-d forms in r variables.

    ``coords`` maps basis wedges to Polynomials that are either constants or
    polynomials in the matrix-entry variables only.
    """

    r: int
    d: int
    b: int
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.coords.items():
            if not isinstance(c, Polynomial):
                c = Polynomial.constant(c)
            if c.is_zero():
                continue
            if c.has_space_vars():
                raise ValueError("coordinates must not contain space variables")
            _check_wedge(w, self.r, self.d, self.b)
            clean[tuple(w)] = c
        object.__setattr__(self, "coords", clean)

    @property
    def ambient(self) -> tuple:
        return (self.r, self.d, self.b)

    def is_zero(self) -> bool:
        return not self.coords

    def is_numeric(self) -> bool:
        return all(c.is_constant() for c in self.coords.values())

    def coordinate(self, w: WedgeIndex) -> Polynomial:
        return self.coords.get(tuple(w), Polynomial())

    def sorted_items(self) -> list:
        return sorted(self.coords.items(), key=lambda kv: [lex_key(m) for m in kv[0]])

    def scale(self, c) -> "ExteriorVector":
        return ExteriorVector(self.r, self.d, self.b, {w: v * c for w, v in self.coords.items()})

    def __add__(self, other: "ExteriorVector") -> "ExteriorVector":
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        out = dict(self.coords)
        for w, c in other.coords.items():
            out[w] = out[w] + c if w in out else c
        return ExteriorVector(self.r, self.d, self.b, out)

    def weights(self) -> set:
        return {weight_of(w, self.r) for w in self.coords}

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "b": self.b,
            "coords": [
                {"wedge": [list(m.exponent_vector(self.r)) for m in w], "coeff": str(c)}
                for w, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExteriorVector":
        r, d, b = int(data["r"]), int(data["d"]), int(data["b"])
        coords = {}
        for entry in data.get("coords", []):
            w = tuple(Monomial.from_exponents(vec) for vec in entry["wedge"])
            if len(w) and any(len(vec) != r for vec in entry["wedge"]):
                raise ValueError("wedge exponent vector length differs from r")
            coeff = entry["coeff"]
            c = parse_poly(coeff) if isinstance(coeff, str) else Polynomial.constant(Fraction(coeff))
            if w in coords:
                raise ValueError(f"duplicate wedge {entry['wedge']}")
            coords[w] = c
        return cls(r, d, b, coords)


def wedge_from_factors(ps: list, r: int, d: int) -> ExteriorVector:
    """Wedge p_1 ^ ... ^ p_b expressed in the basis W_{d,b}.

    Each coordinate is the b x b minor of the coefficient matrix; factors may
    carry matrix-entry variables in their coefficients.
    """
    b = len(ps)
    if b == 0:
        raise ValueError("need at least one factor")
    rows = []
    for p in ps:
        if not p.is_homogeneous_in_space(d):
            raise ValueError(f"factor {p} is not homogeneous of degree {d} in x")
        if any(v[0] == SPACE and v[1] > r for v in p.variables()):
            raise ValueError(f"factor {p} uses variables beyond x_{r}")
        rows.append(p.space_coefficients())
    support = sorted({m for row in rows for m in row}, key=lex_key)
    coords = {}
    zero = Polynomial()
    if b == 1:
        for m in support:
            coords[(m,)] = rows[0][m]
        return ExteriorVector(r, d, 1, coords)
    for cols in combinations(support, b):
        matrix = [[row.get(m, zero) for m in cols] for row in rows]
        if any(all(not e for e in line) for line in matrix):
            continue
        val = det_poly(matrix)
        if val:
            coords[cols] = val
    return ExteriorVector(r, d, b, coords)

