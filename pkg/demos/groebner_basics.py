"""
Groebner bases and solvability
==============================

A polynomial system has a common zero over the algebraic closure iff 1 is not
in the ideal it generates.  The reduced Groebner basis is {1} exactly in the
unsolvable case, so solvability is a single Buchberger run.
"""

from semistab import buchberger, divide, is_solvable, parse_poly
from semistab.groebner import GREVLEX, LEX

# %%
# Division by a list is order-sensitive and its remainder is not canonical
# until the divisors form a Groebner basis.

p = parse_poly("x_1*x_2 - 1")
q, rem = divide(p, [parse_poly("x_2^2 - 1")])
print("x_1*x_2 - 1 mod x_2^2 - 1 =", rem)

# %%
# The worked example: <x y - 1, y^2 - 1> with x = x_1 > y = x_2.

gens = [parse_poly("x_1*x_2 - 1"), parse_poly("x_2^2 - 1")]
for order in (LEX, GREVLEX):
    print(order, buchberger(gens, order).strings())

# %%
# Rational coefficients suffice even when the zeros are not rational.

for system in (["x_1^2 + 1"], ["x_1", "x_1 - 1"], ["x_1^2 - 2", "x_2^2 - x_1"], ["x_1*x_2 - 1", "x_1"]):
    print(f"{str(system):28s} solvable: {is_solvable([parse_poly(s) for s in system])}")
