"""SC/ESC solvers, state-polytope membership and the semistability procedure.

A point v is unstable iff for some permutation q and unipotent u the weight
xi = (db/r, ..., db/r) lies outside the convex hull of the state of u.q.v.
Separating covectors can be taken from a finite list built from the weights
of the representation, so the search is over finitely many (q, omega) pairs,
each of which is one ESC instance decided by a Groebner basis.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .action import (
    MatrixElement,
    act_on_exterior,
    all_permutations,
    pair,
    permutation_matrix,
    state,
    symbolic_unipotent,
    transformed_coordinates,
)
from .exterior import ExteriorVector, wedge_basis, wedge_basis_size, wedges_of_weight, weight_of
from .groebner import LEX, GroebnerBasis, buchberger
from .linalg import nullspace
from .lp import convex_combination
from .reduction import ESCInstance, SCInstance

MAX_BASIS = 2_000_000


def coefficient_ideal(v: ExteriorVector, characters) -> list:
    """Coordinates of u.v at every wedge whose weight is in ``characters``.

    u is the symbolic upper unipotent matrix; the common zeros of the returned
    polynomials are exactly the u for which no character of the set is in the
    state of u.v.
    """
    characters = sorted({tuple(int(c) for c in chi) for chi in characters})
    if not characters:
        raise ValueError("the character set must be nonempty")
    if not v.is_numeric():
        raise ValueError("the point must have rational coordinates")
    targets = []
    for chi in characters:
        if len(chi) != v.r:
            raise ValueError(f"character {chi} has length {len(chi)}, expected {v.r}")
        targets.extend(wedges_of_weight(v.r, v.d, v.b, chi))
    coords = transformed_coordinates(symbolic_unipotent(v.r), v, targets)
    return [coords[tuple(t)] for t in targets if coords[tuple(t)]]


def solve_esc(inst: ESCInstance, deadline: float | None = None) -> bool:
    gens = coefficient_ideal(inst.point, inst.characters)
    return not buchberger(gens, LEX, deadline).contains_one()


def solve_sc(inst: SCInstance, deadline: float | None = None) -> bool:
    return solve_esc(ESCInstance(inst.point, (inst.character,)), deadline)


def xi_point(d: int, b: int, r: int) -> tuple:
    if r < 1:
        raise ValueError("r must be >= 1")
    return (Fraction(d * b, r),) * r


def in_hull(weights, xi) -> bool:
    """Whether xi is a convex combination of the weights (exact LP)."""
    weights = [tuple(w) for w in weights]
    if not weights:
        raise ValueError("weight set must be nonempty")
    if any(len(w) != len(xi) for w in weights):
        raise ValueError("weights and xi have different lengths")
    return convex_combination(weights, xi) is not None


def all_weights(r: int, d: int, b: int) -> list:
    """Distinct weights of the wedge basis, sorted."""
    if wedge_basis_size(r, d, b) > MAX_BASIS:
        raise ValueError("wedge basis too large to enumerate")
    return sorted({weight_of(w, r) for w in wedge_basis(r, d, b)})


def _primitive(vec) -> tuple:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g else tuple(ints)


def candidate_covectors(r: int, d: int, b: int, weights=None) -> list:
    """Finite covector list complete for separating xi from any sub-hull of the weights.

    Normals (orthogonal to (1, ..., 1)) of every hyperplane of the affine
    weight plane spanned by r-1 weights, both orientations, together with the
    coordinate differences e_i - e_j.
    """
    W = all_weights(r, d, b) if weights is None else sorted(set(map(tuple, weights)))
    found = set()
    ones = [1] * r
    for i in range(r):
        for j in range(r):
            if i != j:
                found.add(tuple(int(k == i) - int(k == j) for k in range(r)))
    if r >= 2:
        for subset in combinations(W, r - 1):
            base = subset[0]
            rows = [ones] + [[a - c for a, c in zip(w, base)] for w in subset[1:]]
            ker = nullspace(rows, r)
            if len(ker) != 1:
                continue
            n = _primitive(ker[0])
            found.add(n)
            found.add(tuple(-x for x in n))
    return sorted(tuple(Fraction(x) for x in n) for n in found)


@dataclass(frozen=True)
class Verdict:
    semistable: bool
    q: tuple | None = None
    omega: tuple | None = None
    groebner: GroebnerBasis | None = None
    characters: tuple = ()
    checked_pairs: int = 0

    def to_dict(self) -> dict:
        if self.semistable:
            cert = {"checked_pairs": self.checked_pairs}
        else:
            cert = {
                "q": list(self.q),
                "omega": [str(x) for x in self.omega],
                "groebner": self.groebner.strings(),
            }
        return {"semistable": self.semistable, "certificate": cert}


def _search_permutation(args) -> tuple:
    """First omega index (and its basis) for which the ESC instance is solvable."""
    v, q, omegas, weights, xi, deadline = args
    qv = act_on_exterior(permutation_matrix(q), v)
    below = []
    for omega in omegas:
        level = pair(omega, xi)
        below.append([chi for chi in weights if pair(omega, chi) <= level])
    needed = sorted({chi for chars in below for chi in chars})
    targets_by_weight = {chi: wedges_of_weight(v.r, v.d, v.b, chi) for chi in needed}
    targets = [t for chi in needed for t in targets_by_weight[chi]]
    coords = transformed_coordinates(symbolic_unipotent(v.r), qv, targets)
    for k, chars in enumerate(below):
        gens = [coords[t] for chi in chars for t in targets_by_weight[chi] if coords[t]]
        basis = buchberger(gens, LEX, deadline)
        if not basis.contains_one():
            return k, basis, tuple(chars)
    return None, None, None


def is_semistable(v: ExteriorVector, jobs: int = 1, deadline: float | None = None) -> Verdict:
    """Decide GIT-semistability of a rational point of Lambda^b S_d."""
    if v.is_zero():
        raise ValueError("the point must be nonzero")
    if not v.is_numeric():
        raise ValueError("the point must have rational coordinates")
    r, d, b = v.ambient
    xi = xi_point(d, b, r)
    weights = all_weights(r, d, b)
    omegas = candidate_covectors(r, d, b, weights)
    perms = all_permutations(r)
    tasks = [(v, q, omegas, weights, xi, deadline) for q in perms]
    if jobs > 1 and len(perms) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_permutation, tasks))
    else:
        results = []
        for task in tasks:
            res = _search_permutation(task)
            results.append(res)
            if res[0] is not None:
                break
    for q, (k, basis, chars) in zip(perms, results):
        if k is not None:
            return Verdict(False, q=q, omega=omegas[k], groebner=basis, characters=chars)
    return Verdict(True, checked_pairs=len(perms) * len(omegas))


def delta_contains_xi(v: ExteriorVector, g: MatrixElement) -> bool:
    """Whether xi lies in the hull of the state of g.v, for an invertible numeric g."""
    if not g.is_numeric():
        raise ValueError("g must be numeric")
    if g.det().constant_value() == 0:
        raise ValueError("g is singular")
    gv = act_on_exterior(g, v)
    return in_hull(state(gv), xi_point(v.d, v.b, v.r))


def now_plus(seconds: float | None) -> float | None:
    return None if seconds is None else time.monotonic() + seconds
