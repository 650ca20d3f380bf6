"""Buchberger's algorithm over the rationals and the solvability test.

Polynomials are converted to dense exponent tuples over the variables that
occur in the ideal, ordered by variable priority (see ``poly``), so that lex
is plain tuple comparison.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Monomial, Polynomial

LEX = "lex"
GREVLEX = "grevlex"
ORDERS = (LEX, GREVLEX)


class GroebnerTimeout(TimeoutError):
    """Raised when a deadline passed to :func:`buchberger` expires."""


def order_key(order: str):
    if order == LEX:
        return lambda e: e
    if order == GREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError(f"unknown monomial order {order!r}; use one of {ORDERS}")


class _Ring:
    def __init__(self, polys: Iterable[Polynomial], order: str):
        self.vars = sorted({v for p in polys for v in p.variables()})
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.n = len(self.vars)
        self.order = order
        self.key = order_key(order)

    def to_dense(self, p: Polynomial) -> dict:
        out = {}
        for m, c in p.terms.items():
            e = [0] * self.n
            for v, k in m:
                e[self.index[v]] = k
            out[tuple(e)] = c
        return out

    def to_poly(self, p: dict) -> Polynomial:
        return Polynomial(
            (Monomial((self.vars[i], k) for i, k in enumerate(e) if k), c) for e, c in p.items()
        )


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(p: dict, f: Fraction, shift: tuple, g: dict):
    """p -= f * x^shift * g, in place."""
    for m, c in g.items():
        nm = tuple(a + b for a, b in zip(m, shift))
        v = p.get(nm, 0) - f * c
        if v:
            p[nm] = v
        else:
            p.pop(nm, None)


def _monic(p: dict, key) -> dict:
    lc = p[max(p, key=key)]
    if lc == 1:
        return p
    return {m: c / lc for m, c in p.items()}


def _normal_form(p: dict, basis: list, key) -> dict:
    """Full reduction of p by basis entries ``(lm, poly)`` with monic polys."""
    p = dict(p)
    rem = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                _sub_scaled(p, c / g[glm], shift, g)
                break
        else:
            rem[lm] = c
            del p[lm]
    return rem


def _spoly(f: dict, flm: tuple, g: dict, glm: tuple) -> dict:
    lcm = _lcm(flm, glm)
    out = {}
    sf = tuple(a - b for a, b in zip(lcm, flm))
    sg = tuple(a - b for a, b in zip(lcm, glm))
    _sub_scaled(out, -1 / f[flm], sf, f)
    _sub_scaled(out, 1 / g[glm], sg, g)
    return out


def _is_const(p: dict) -> bool:
    return len(p) == 1 and not any(next(iter(p)))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple  # monic Polynomials, sorted by leading monomial, descending
    order: str

    def contains_one(self) -> bool:
        return len(self.elements) == 1 and self.elements[0] == Polynomial.constant(1)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def strings(self) -> list:
        return [str(p) for p in self.elements]


def _clean_generators(gens: Sequence[Polynomial]) -> list:
    out = []
    for p in gens:
        if not isinstance(p, Polynomial):
            raise TypeError("ideal generators must be Polynomials")
        if p.has_space_vars() and p.has_matrix_vars():
            raise ValueError("ideal generators must use a single variable sort")
        if p:
            out.append(p)
    return out


def buchberger(gens: Sequence[Polynomial], order: str = LEX, deadline: float | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``deadline`` is a ``time.monotonic()`` value; past it, GroebnerTimeout is raised.
    """
    gens = _clean_generators(gens)
    if not gens:
        return GroebnerBasis((), order)
    ring = _Ring(gens, order)
    key = ring.key
    one = GroebnerBasis((Polynomial.constant(1),), order)

    basis: list = []  # (lm, monic dict)
    pairs: set = set()

    def add(h: dict):
        h = _monic(h, key)
        lm = max(h, key=key)
        k = len(basis)
        basis.append((lm, h))
        for i in range(k):
            pairs.add((i, k))

    for p in sorted((ring.to_dense(g) for g in gens), key=lambda d: key(max(d, key=key))):
        h = _normal_form(p, basis, key)
        if not h:
            continue
        if _is_const(h):
            return one
        add(h)

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("Groebner basis computation exceeded its deadline")
        # normal strategy: smallest lcm first, ties by index for determinism
        i, j = min(pairs, key=lambda ij: (key(_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij))
        pairs.discard((i, j))
        lmi, fi = basis[i]
        lmj, fj = basis[j]
        lcm = _lcm(lmi, lmj)
        # coprime leading monomials: S-polynomial reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        # chain criterion
        if any(
            k not in (i, j)
            and _divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        h = _normal_form(_spoly(fi, lmi, fj, lmj), basis, key)
        if not h:
            continue
        if _is_const(h):
            return one
        add(h)

    # minimise then interreduce
    lms = [lm for lm, _ in basis]
    keep = []
    for idx, (lm, f) in enumerate(basis):
        redundant = any(
            _divides(other, lm) and (other != lm or jdx < idx)
            for jdx, other in enumerate(lms)
            if jdx != idx
        )
        if not redundant:
            keep.append((lm, f))
    reduced = []
    for idx, (lm, f) in enumerate(keep):
        others = [entry for jdx, entry in enumerate(keep) if jdx != idx]
        tail = dict(f)
        del tail[lm]
        nf = _normal_form(tail, others, key)
        nf[lm] = Fraction(1)
        reduced.append((lm, nf))
    reduced.sort(key=lambda e: key(e[0]), reverse=True)
    return GroebnerBasis(tuple(ring.to_poly(f) for _, f in reduced), order)


def divide(p: Polynomial, divisors: Sequence[Polynomial], order: str = LEX) -> tuple[list, Polynomial]:
    """Multivariate division: ``p == sum(q_i * f_i) + remainder``."""
    divisors = list(divisors)
    if any(not f for f in divisors):
        raise ValueError("cannot divide by the zero polynomial")
    ring = _Ring([p, *divisors], order)
    key = ring.key
    ds = [ring.to_dense(f) for f in divisors]
    lms = [max(f, key=key) for f in ds]
    quotients = [{} for _ in ds]
    rest = ring.to_dense(p)
    rem = {}
    while rest:
        lm = max(rest, key=key)
        c = rest[lm]
        for k, (f, flm) in enumerate(zip(ds, lms)):
            if _divides(flm, lm):
                shift = tuple(a - b for a, b in zip(lm, flm))
                coef = c / f[flm]
                quotients[k][shift] = quotients[k].get(shift, 0) + coef
                _sub_scaled(rest, coef, shift, f)
                break
        else:
            rem[lm] = c
            del rest[lm]
    return [ring.to_poly(q) for q in quotients], ring.to_poly(rem)


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: str = LEX) -> Polynomial:
    """Remainder of p on division by a list of polynomials."""
    return divide(p, basis, order)[1] if basis else p


def s_polynomial(f: Polynomial, g: Polynomial, order: str = LEX) -> Polynomial:
    ring = _Ring([f, g], order)
    fd, gd = ring.to_dense(f), ring.to_dense(g)
    return ring.to_poly(_spoly(fd, max(fd, key=ring.key), gd, max(gd, key=ring.key)))


def leading_monomial(p: Polynomial, order: str = LEX) -> Monomial:
    ring = _Ring([p], order)
    lm = max(ring.to_dense(p), key=ring.key)
    return Monomial((ring.vars[i], k) for i, k in enumerate(lm) if k)


def contains_one(basis: GroebnerBasis) -> bool:
    return basis.contains_one()


def is_solvable(gens: Sequence[Polynomial], order: str = LEX, deadline: float | None = None) -> bool:
    """True iff the generators have a common zero over the algebraic closure."""
    return not buchberger(gens, order, deadline).contains_one()
