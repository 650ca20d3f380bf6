"""Hilbert points of homogeneous ideals, Q(d), and Gotzmann numbers.

Hilbert polynomials are coefficient tuples in ``t``, constant term first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exterior import ExteriorVector, wedge_from_factors
from .linalg import rref
from .poly import SPACE, Polynomial, binomial, monomials_of_degree

UPoly = tuple


def upoly(coeffs: Sequence) -> UPoly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def upoly_add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return upoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def upoly_neg(a: UPoly) -> UPoly:
    return tuple(-c for c in a)


def upoly_mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return upoly(out)


def upoly_eval(a: UPoly, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def upoly_degree(a: UPoly) -> int:
    return len(a) - 1


def binomial_poly(shift: int, k: int) -> UPoly:
    """C(t + shift, k) as a polynomial in t."""
    if k < 0:
        return ()
    out: UPoly = (Fraction(1),)
    for i in range(k):
        out = upoly_mul(out, (Fraction(shift - i), Fraction(1)))
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return tuple(c / fact for c in out)


def format_upoly(a: UPoly, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def degree_piece_basis(gens: Sequence[Polynomial], r: int, d: int) -> list:
    """Row-reduced basis of I_d as Polynomials, I generated by ``gens``."""
    mons = monomials_of_degree(r, d)
    col = {m: k for k, m in enumerate(mons)}
    rows = []
    for f in gens:
        if f.is_zero():
            continue
        if f.has_matrix_vars():
            raise ValueError("ideal generators must be polynomials in x only")
        e = f.degree
        if not f.is_homogeneous_in_space(e):
            raise ValueError(f"generator {f} is not homogeneous")
        if any(v[0] == SPACE and v[1] > r for v in f.variables()):
            raise ValueError(f"generator {f} uses variables beyond x_{r}")
        if e > d:
            raise ValueError(f"degree {d} is below the generator degree {e}")
        for m in monomials_of_degree(r, d - e):
            row = [Fraction(0)] * len(mons)
            for fm, c in f.terms.items():
                row[col[fm * m]] = c
            rows.append(row)
    reduced, _ = rref(rows) if rows else ([], [])
    return [Polynomial({mons[k]: c for k, c in enumerate(row) if c}) for row in reduced]


def hilbert_point(gens: Sequence[Polynomial], d: int, r: int | None = None) -> tuple[ExteriorVector, int]:
    """The wedge of a basis of I_d and b = dim I_d."""
    if r is None:
        r = max((v[1] for f in gens for v in f.variables() if v[0] == SPACE), default=1)
    basis = degree_piece_basis(gens, r, d)
    if not basis:
        raise ValueError(f"the degree-{d} piece of the ideal is zero")
    return wedge_from_factors(basis, r, d), len(basis)


def q_of_d(P: UPoly, r: int, d: int) -> int:
    """C(r+d-1, d) - P(d), the wedge degree of the Hilbert-point immersion."""
    val = upoly_eval(upoly(P), d)
    if val.denominator != 1:
        raise ValueError(f"P({d}) = {val} is not an integer")
    q = binomial(r + d - 1, d) - int(val)
    if q <= 0:
        raise ValueError(f"Q({d}) = {q}: the degree-{d} piece would be zero")
    return q


def gotzmann_decomposition(P: UPoly, max_terms: int = 100_000) -> list:
    """Exponents a_1 >= ... >= a_s with P(t) = sum_i C(t + a_i - i + 1, a_i)."""
    rest = upoly(P)
    exps = []
    while rest:
        a = upoly_degree(rest)
        if rest[-1] <= 0:
            raise ValueError("not a Hilbert polynomial: negative leading coefficient")
        if exps and a > exps[-1]:
            raise ValueError("not a Hilbert polynomial: exponents must be non-increasing")
        i = len(exps) + 1
        rest = upoly_add(rest, upoly_neg(binomial_poly(a - i + 1, a)))
        exps.append(a)
        if len(exps) > max_terms:
            raise ValueError("Gotzmann decomposition did not terminate")
    return exps


def gotzmann_number(P: UPoly) -> int:
    return len(gotzmann_decomposition(P))

