"""
Semistability of binary forms
=============================

A binary form of degree d is a point of S_d, the b = 1 case of the exterior
power. Its state is the set of exponent vectors of its monomials, and it is
semistable exactly when xi = (d/2, d/2) stays inside the hull of the state
under every change of coordinates. Classically: semistable iff no root has
multiplicity above d/2.
"""

from semistab import is_semistable, parse_poly, state, wedge_from_factors
from semistab.action import act_on_exterior, permutation_matrix, upper_unipotent
from semistab.decision import delta_contains_xi, xi_point

# %%
# States of a few forms.  The weight of x_1^a x_2^b is simply (a, b).

forms = {
    "x_1*x_2": 2,
    "x_1^2": 2,
    "x_1^3 + x_2^3": 3,
    "x_1^2*x_2": 3,
    "x_1^3*x_2 + x_2^4": 4,
    "x_1^4 + x_1^3*x_2": 4,
}
for text, d in forms.items():
    v = wedge_from_factors([parse_poly(text)], 2, d)
    xi = ", ".join(str(c) for c in xi_point(d, 1, 2))
    print(f"{text:22s} state {sorted(state(v), reverse=True)}  xi ({xi})")

# %%
# The decision procedure searches permutations q and candidate covectors
# omega for a unipotent u that pushes every weight to the far side of xi.
# A semistable verdict records how many (q, omega) pairs were exhausted.
# For the unstable forms below, u.v has zero coordinates at every weight on
# xi's side of omega = (1, -1), whatever u is, so the coefficient ideal is
# zero and its reduced basis is empty.

for text, d in forms.items():
    v = wedge_from_factors([parse_poly(text)], 2, d)
    verdict = is_semistable(v)
    if verdict.semistable:
        print(f"{text:22s} semistable ({verdict.checked_pairs} pairs checked)")
    else:
        print(f"{text:22s} unstable: q={verdict.q} omega={[str(w) for w in verdict.omega]}"
              f" basis={verdict.groebner.strings()}")

# %%
# The state depends on coordinates.  x_1*x_2 becomes x_1^2 + x_1*x_2 after
# the shear x_2 -> x_1 + x_2, which adds the weight (2, 0) but leaves
# (1, 1) = xi in the hull.  A single-weight state like x_1^2 never
# recovers xi, whatever the coordinates.

shear = upper_unipotent(2, {(1, 2): 1})
swap = permutation_matrix((2, 1))
for text in ("x_1*x_2", "x_1^2"):
    v = wedge_from_factors([parse_poly(text)], 2, 2)
    moved = act_on_exterior(shear, v)
    print(text, "->", sorted(state(moved), reverse=True),
          "| xi in hull:", delta_contains_xi(v, shear), delta_contains_xi(v, swap @ shear))
