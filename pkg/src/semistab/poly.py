"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in two sorts sharing one ring: space variables ``x_i`` and
matrix-entry variables ``g_i_j``.  A variable is a plain tuple, ``(0, i)`` for
``x_i`` and ``(1, i, j)`` for ``g_i_j``; tuple order is the variable priority
used by the lexicographic order (``x_1 > x_2 > ... > g_1_1 > g_1_2 > ...``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Mapping, Union

SPACE = 0
MATRIX = 1

VarRef = tuple
Scalar = Union[int, Fraction]


def xvar(i: int) -> VarRef:
    if i < 1:
        raise ValueError(f"space variable index must be >= 1, got {i}")
    return (SPACE, i)


def gvar(i: int, j: int) -> VarRef:
    if i < 1 or j < 1:
        raise ValueError(f"matrix variable indices must be >= 1, got ({i}, {j})")
    return (MATRIX, i, j)


def var_name(v: VarRef) -> str:
    if v[0] == SPACE:
        return f"x_{v[1]}"
    return f"g_{v[1]}_{v[2]}"


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (including negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


class Monomial(tuple):
    """Sorted tuple of ``(var, exponent)`` pairs with positive exponents."""

    __slots__ = ()

    def __new__(cls, exponents: Union[Mapping, Iterable] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                merged[v] = merged.get(v, 0) + e
        return super().__new__(cls, sorted(merged.items()))

    @classmethod
    def _raw(cls, pairs) -> "Monomial":
        return tuple.__new__(cls, pairs)

    def as_dict(self) -> dict:
        return dict(self)

    def exponent(self, v: VarRef) -> int:
        for w, e in self:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    @property
    def space_degree(self) -> int:
        return sum(e for v, e in self if v[0] == SPACE)

    @property
    def matrix_degree(self) -> int:
        return sum(e for v, e in self if v[0] == MATRIX)

    def variables(self) -> tuple:
        return tuple(v for v, _ in self)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self:
            return other
        if not other:
            return self
        d = dict(self)
        for v, e in other:
            d[v] = d.get(v, 0) + e
        return Monomial._raw(sorted(d.items()))

    def split(self) -> tuple["Monomial", "Monomial"]:
        """(space part, matrix part)."""
        xs = [(v, e) for v, e in self if v[0] == SPACE]
        gs = [(v, e) for v, e in self if v[0] == MATRIX]
        return Monomial._raw(xs), Monomial._raw(gs)

    def exponent_vector(self, r: int) -> tuple:
        vec = [0] * r
        for v, e in self:
            if v[0] != SPACE or v[1] > r:
                raise ValueError(f"{self} is not a monomial in x_1..x_{r}")
            vec[v[1] - 1] = e
        return tuple(vec)

    @classmethod
    def from_exponents(cls, vec: Iterable[int]) -> "Monomial":
        return cls((xvar(i + 1), e) for i, e in enumerate(vec))

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(var_name(v) + (f"^{e}" if e > 1 else "") for v, e in self)

    def __repr__(self) -> str:
        return f"Monomial({self})"


ONE_MONOMIAL = Monomial()


def lex_key(m: Monomial) -> tuple:
    """Sort key placing lex-greater monomials first."""
    return tuple((v, -e) for v, e in m) + (((9,),),)


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is lex-smaller, equal or greater than ``b``."""
    ka, kb = lex_key(a), lex_key(b)
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Polynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        self.terms: dict = {}
        self._hash = None
        if terms is None:
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if not isinstance(m, Monomial):
                m = Monomial(m)
            c = _to_fraction(c)
            if c:
                s = self.terms.get(m, 0) + c
                if s:
                    self.terms[m] = s
                else:
                    self.terms.pop(m, None)

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        c = _to_fraction(c)
        return cls._wrap({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, v: VarRef) -> "Polynomial":
        return cls._wrap({Monomial._raw(((v, 1),)): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> "Polynomial":
        c = _to_fraction(c)
        return cls._wrap({m: c} if c else {})

    # queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONOMIAL in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(ONE_MONOMIAL, Fraction(0))

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def has_space_vars(self) -> bool:
        return any(v[0] == SPACE for v in self.variables())

    def has_matrix_vars(self) -> bool:
        return any(v[0] == MATRIX for v in self.variables())

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    @property
    def space_degree(self) -> int:
        return max((m.space_degree for m in self.terms), default=-1)

    def is_homogeneous_in_space(self, d: int) -> bool:
        return all(m.space_degree == d for m in self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: lex_key(t[0]))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return min(self.terms, key=lex_key)

    def space_coefficients(self) -> dict:
        """Group by x-monomial: {x-monomial: polynomial in the g-variables}."""
        out: dict = {}
        for m, c in self.terms.items():
            xm, gm = m.split()
            out.setdefault(xm, {})[gm] = c
        return {xm: Polynomial._wrap(t) for xm, t in out.items()}

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "Polynomial":
        c = _to_fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._wrap({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial._wrap(terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / _to_fraction(c))
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_scalar_mul(c: Scalar, a: Polynomial) -> Polynomial:
    return a.scale(c)


def poly_pow(a: Polynomial, n: int) -> Polynomial:
    return a ** n


def X(i: int) -> Polynomial:
    return Polynomial.var(xvar(i))


def G(i: int, j: int) -> Polynomial:
    return Polynomial.var(gvar(i, j))


def partial_derivative(p: Polynomial, v: VarRef, order: int = 1) -> Polynomial:
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    if order == 0:
        return p
    terms: dict = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.get(v, 0)
        if e < order:
            continue
        factor = 1
        for k in range(order):
            factor *= e - k
        d[v] = e - order
        nm = Monomial(d)
        terms[nm] = terms.get(nm, 0) + c * factor
    return Polynomial(terms)


def substitute(p: Polynomial, assignment: Mapping) -> Polynomial:
    """Ring homomorphism sending each assigned variable to a polynomial.

    Unassigned variables are left unchanged.
    """
    assignment = {
        v: (q if isinstance(q, Polynomial) else Polynomial.constant(q))
        for v, q in assignment.items()
    }
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = assignment[v] ** e
        return powers[key]

    result: dict = {}
    for m, c in p.terms.items():
        kept = []
        acc = None
        for v, e in m:
            if v in assignment:
                f = power(v, e)
                acc = f if acc is None else acc * f
            else:
                kept.append((v, e))
        base = Polynomial._wrap({Monomial._raw(tuple(kept)): c})
        term = base if acc is None else base * acc
        for tm, tc in term.terms.items():
            s = result.get(tm, 0) + tc
            if s:
                result[tm] = s
            else:
                result.pop(tm, None)
    return Polynomial._wrap(result)


def evaluate(p: Polynomial, values: Mapping) -> Fraction:
    """Evaluate at a full rational assignment."""
    out = substitute(p, values)
    return out.constant_value()


def monomials_of_degree(r: int, d: int) -> list:
    """All degree-d monomials in x_1..x_r, lex descending."""
    if r < 1 or d < 0:
        raise ValueError("need r >= 1 and d >= 0")
    mons = []
    for combo in combinations_with_replacement(range(1, r + 1), d):
        vec = [0] * r
        for i in combo:
            vec[i - 1] += 1
        mons.append(Monomial.from_exponents(vec))
    # combinations_with_replacement over ascending indices already yields
    # lex-descending order
    return mons


# text grammar ---------------------------------------------------------------

_FACTOR = re.compile(r"^(x_(\d+)|g_(\d+)_(\d+))(?:\^(\d+))?$")
_COEFF = re.compile(r"^\d+(?:/\d+)?$")


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = str(a)
        elif a == 1:
            body = str(m)
        else:
            body = f"{a}*{m}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def parse_poly(text: str) -> Polynomial:
    """Parse e.g. ``3/2*x_1^2*x_2 - g_1_2``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sg + body for sg, body in pieces) != s:
        raise ValueError(f"malformed polynomial text: {text!r}")
    terms: dict = {}
    for sg, body in pieces:
        coeff = Fraction(-1 if sg == "-" else 1)
        exps: dict = {}
        for factor in body.split("*"):
            if _COEFF.match(factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"unrecognised factor {factor!r} in {text!r}")
            if fm.group(2):
                v = xvar(int(fm.group(2)))
            else:
                v = gvar(int(fm.group(3)), int(fm.group(4)))
            exps[v] = exps.get(v, 0) + int(fm.group(5) or 1)
        m = Monomial(exps)
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial(terms)
