"""
From a polynomial system to a state-avoidance instance
======================================================

The hardness reduction turns polynomials p_0, ..., p_{l-3} in x_2..x_r into
a point v of Lambda^2 S_{2l+d} in one extra variable, together with a
character chi.  Some upper unipotent u removes chi from the state of u.v
exactly when the system has a common zero.  This script builds the instance
step by step for {x_2 - 1} and then checks the equivalence on a few systems.
"""

from semistab import PolySystem, is_solvable, reduce_sysal_to_sc, solve_sc, witness_from_root
from semistab.decision import coefficient_ideal
from semistab.poly import substitute
from semistab.reduction import (
    alternating_sum,
    build_F,
    build_psi,
    f_polys,
    pi_polys,
    point_factors,
    target_character,
    witness_assignment,
)

system = PolySystem(2, ["x_2 - 1"])
print("l =", system.l, " d =", system.d)

# %%
# The constants in psi come from alternating binomial sums, which never vanish.

print("alternating sums:", [alternating_sum(system.l, j) for j in range(system.l)])
psi = build_psi(system)
print("psi:", [str(p) for p in psi])

# %%
# F spreads psi out with factorial weights, pads with zeros, and ends in 1.

F = build_F(psi)
print("F:", [str(f) for f in F])
first, second = point_factors(F, system.r, system.d)
print("factors of the point:")
print("  ", first)
print("  ", second)

# %%
# Under u, the coordinates at the wedges of weight chi are f-polynomials in the
# first row of u, and suitable combinations of them are the pi-polynomials.
# Each pi_j carries psi_j(1, g_12) times a power of g_13; this is where the
# system enters.

print("chi =", target_character(system.r, system.l, system.d))
for a, f in enumerate(f_polys(F, system.r)):
    print(f"  f_{a} = {f}")
for j, p in enumerate(pi_polys(psi, system.r)):
    print(f"  pi_{j} = {p}")

# %%
# The root x_2 = 1 gives a unipotent matrix that kills every coordinate of
# weight chi.

inst = reduce_sysal_to_sc(system)
u = witness_from_root(system, [1])
gens = coefficient_ideal(inst.point, [inst.character])
print("witness first row:", [str(u[0, k]) for k in range(3)])
print("coefficients at the witness:", [str(substitute(g, witness_assignment(u))) for g in gens])

# %%
# End to end: the instance is solvable exactly when the system is.

for r, polys in [(2, ["x_2 - 1"]), (2, ["1"]), (2, ["x_2", "x_2 - 1"]), (2, ["x_2^2 + 1"]),
                 (3, ["x_2*x_3 - 1", "x_2 - x_3"]), (3, ["x_2*x_3 - 1", "x_2"])]:
    s = PolySystem(r, polys)
    print(f"{str(polys):32s} system solvable: {is_solvable(s.polys)!s:5s}"
          f"  instance solvable: {solve_sc(reduce_sysal_to_sc(s))}")
