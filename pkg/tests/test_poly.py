from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semistab.poly import (
    G,
    Monomial,
    Polynomial,
    X,
    binomial,
    format_poly,
    gvar,
    lex_compare,
    monomials_of_degree,
    parse_poly,
    partial_derivative,
    substitute,
    xvar,
)


def mono(**exps):
    """mono(x1=2, x2=1) -> x_1^2*x_2."""
    return Monomial({xvar(int(k[1:])): e for k, e in exps.items()})


# lex order ------------------------------------------------------------------

def test_lex_examples():
    assert lex_compare(mono(x1=2), mono(x1=1, x2=1)) == 1
    assert lex_compare(mono(x2=1), mono(x2=1)) == 0
    assert lex_compare(mono(x1=1, x3=1), mono(x1=1, x2=1)) == -1


def test_lex_space_before_matrix_and_g12_greatest():
    g12 = Monomial({gvar(1, 2): 1})
    g13 = Monomial({gvar(1, 3): 1})
    g23 = Monomial({gvar(2, 3): 1})
    assert lex_compare(mono(x5=1), g12) == 1
    assert lex_compare(g12, g13) == 1
    assert lex_compare(g13, g23) == 1


monomials = st.dictionaries(
    st.sampled_from([xvar(1), xvar(2), xvar(3), gvar(1, 2), gvar(2, 3)]),
    st.integers(0, 3),
    max_size=4,
).map(Monomial)


@given(monomials, monomials, monomials)
def test_lex_is_total_order(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == 0) == (a == b)
    if lex_compare(a, b) >= 0 and lex_compare(b, c) >= 0:
        assert lex_compare(a, c) >= 0
    # multiplicative
    if lex_compare(a, b) > 0:
        assert lex_compare(a * c, b * c) > 0


# arithmetic -----------------------------------------------------------------

def test_arith_examples():
    x1, x2 = X(1), X(2)
    assert (x1 + x2) ** 2 == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert (x1 + x2) * 0 == Polynomial()
    assert x1 * Fraction(1, 2) + x1 * Fraction(1, 2) == x1
    assert (x1 - x1).is_zero()


small_polys = st.dictionaries(
    monomials, st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4
).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == Polynomial()


def test_pow_zero_is_one():
    assert X(1) ** 0 == Polynomial.constant(1)
    with pytest.raises(ValueError):
        X(1) ** -1


# derivatives ----------------------------------------------------------------

def test_partial_derivative_examples():
    x1, x2 = X(1), X(2)
    assert partial_derivative(x1 ** 3, xvar(1)) == 3 * x1 ** 2
    assert partial_derivative(partial_derivative(x1 * x2, xvar(1)), xvar(2)) == Polynomial.constant(1)
    assert partial_derivative(x1 ** 2, xvar(2)).is_zero()
    assert partial_derivative(x1 ** 5, xvar(1), 3) == 60 * x1 ** 2


@settings(max_examples=40, deadline=None)
@given(small_polys, st.sampled_from([xvar(1), xvar(2), gvar(1, 2)]),
       st.sampled_from([xvar(1), xvar(3), gvar(2, 3)]))
def test_partials_commute(p, u, v):
    assert partial_derivative(partial_derivative(p, u), v) == partial_derivative(partial_derivative(p, v), u)


# substitution ---------------------------------------------------------------

def test_substitute_examples():
    assert substitute(X(2) - 1, {xvar(2): G(1, 2)}) == G(1, 2) - 1
    assert substitute(X(1) ** 2 * X(2), {xvar(1): 1, xvar(2): G(1, 2)}) == G(1, 2)
    p = parse_poly("3*x_1^2*x_2 - x_3 + 5")
    assert substitute(p, {xvar(i): X(i) for i in (1, 2, 3)}) == p
    # unassigned variables pass through
    assert substitute(X(1) * X(2), {xvar(1): 2}) == 2 * X(2)


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys)
def test_substitute_is_ring_homomorphism(p, q):
    a = {xvar(1): X(2) + 1, xvar(2): G(1, 2) * X(3), gvar(1, 2): Polynomial.constant(Fraction(1, 3))}
    assert substitute(p * q, a) == substitute(p, a) * substitute(q, a)
    assert substitute(p + q, a) == substitute(p, a) + substitute(q, a)


# monomial enumeration and binomials ----------------------------------------

def test_monomials_of_degree_examples():
    assert monomials_of_degree(2, 2) == [mono(x1=2), mono(x1=1, x2=1), mono(x2=2)]
    assert monomials_of_degree(1, 5) == [mono(x1=5)]
    assert len(monomials_of_degree(3, 2)) == 6


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("d", range(0, 9))
def test_monomial_count_and_order(r, d):
    mons = monomials_of_degree(r, d)
    assert len(mons) == binomial(r + d - 1, d)
    assert all(lex_compare(a, b) == 1 for a, b in zip(mons, mons[1:]))


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(0, 1) == 0
    assert binomial(3, -1) == 0
    assert binomial(60, 30) == factorial(60) // (factorial(30) ** 2)


# text grammar ---------------------------------------------------------------

def test_parse_example():
    p = parse_poly("3/2*x_1^2*x_2 - g_1_2")
    assert p == Fraction(3, 2) * X(1) ** 2 * X(2) - G(1, 2)
    assert str(p) == "3/2*x_1^2*x_2 - g_1_2"


def test_parse_whitespace_and_signs():
    assert parse_poly(" - x_1 +  2 * x_2 ") == -X(1) + 2 * X(2)
    assert parse_poly("0") == Polynomial()
    assert parse_poly("x_1*x_1") == X(1) ** 2
    assert parse_poly("2*3/4") == Polynomial.constant(Fraction(3, 2))


@pytest.mark.parametrize("bad", ["", "x_0", "x_1 +", "y", "x_1^-1", "x_1**2", "g_1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@settings(max_examples=60, deadline=None)
@given(small_polys)
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


def test_canonical_term_order():
    p = X(2) ** 2 + X(1) * X(2) + X(1) ** 2 + G(1, 2) * X(1)
    assert str(p) == "x_1^2 + x_1*x_2 + x_1*g_1_2 + x_2^2"
