"""
Hilbert points of ideals
========================

The degree-d piece I_d of a homogeneous ideal is a subspace of S_d of
dimension Q(d) = C(r+d-1, d) - P(d).  Wedging a basis gives its Hilbert point
in Lambda^{Q(d)} S_d, well defined up to scale.  Gotzmann's number tells how
large d must be for this to embed the whole Hilbert scheme.
"""

from semistab import gotzmann_number, hilbert_point, is_semistable, parse_poly, q_of_d
from semistab.hilbert import format_upoly, gotzmann_decomposition, upoly

# %%
# Three small ideals in two variables and their Hilbert polynomials.

cases = [
    (["x_1"], 2, (1,)),
    (["x_1 + x_2"], 1, (1,)),
    (["x_1^2 - x_2^2"], 2, (2,)),
]
for gens, d, P in cases:
    v, b = hilbert_point([parse_poly(g) for g in gens], d, 2)
    print(f"<{', '.join(gens)}> in degree {d}: b = {b}, Q(d) = {q_of_d(upoly(P), 2, d)}")
    for w, c in v.sorted_items():
        print("    ", " ^ ".join(str(m) for m in w), "->", c)

# %%
# Gotzmann decompositions write P(t) as a sum of C(t + a_i - i + 1, a_i).

for coeffs in [(1,), (2,), (1, 1), (1, 3)]:
    P = upoly(coeffs)
    print(f"P(t) = {format_upoly(P):14s} exponents {gotzmann_decomposition(P)}"
          f"  Gotzmann number {gotzmann_number(P)}")

# %%
# Two points on the projective line in degree 2 give a single quadric.
# Distinct points are semistable, a double point is not.

for gens in (["x_1*x_2"], ["x_1^2"]):
    v, _ = hilbert_point([parse_poly(g) for g in gens], 2, 2)
    print(gens, "semistable:", is_semistable(v).semistable)
