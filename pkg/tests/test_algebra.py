from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from legpoly.algebra import (
    NEG_INF,
    Poly,
    add,
    antiderivative,
    binomial,
    derivative,
    evaluate,
    factorial,
    format_rational,
    integrate_definite,
    mul,
    parse_rational,
    poly_from_strings,
)

from conftest import X, frac, polys, rationals, to_sympy

x = Poly.x()


def test_zero_polynomial_is_empty():
    assert Poly().coeffs == ()
    assert Poly([0, 0, Fraction(0)]).coeffs == ()
    assert Poly().degree == NEG_INF
    assert not isinstance(Poly().degree, int)


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([1, 2, 0, 0]).degree == 1


def test_add_examples():
    assert add(x, -x) == Poly()
    b2 = Poly([Fraction(1, 6), -1, 1])
    assert add(b2, Poly([Fraction(-1, 2), 1])) == Poly([Fraction(-1, 3), 0, 1])
    assert add(Poly(), b2) == b2


def test_mul_examples():
    assert mul(x - 1, x + 1) == Poly([-1, 0, 1])
    assert mul(Poly.constant(1), Poly([3, 4])) == Poly([3, 4])
    sq = Poly([-1, 0, 1])
    assert mul(sq, sq) == Poly([1, 0, -2, 0, 1])
    assert mul(Poly(), sq) == Poly()


def test_derivative_examples():
    assert derivative(Poly.constant(5), 1) == Poly()
    assert derivative(Poly([1, 0, -2, 0, 1]), 2) == Poly([-4, 0, 12])
    p = Poly([1, 2, 3])
    assert derivative(p, 0) is p
    assert derivative(p, 3) == Poly()
    assert derivative(p, 10) == Poly()


def test_integrate_examples():
    assert integrate_definite(Poly.monomial(2), -1, 1) == Fraction(2, 3)
    assert integrate_definite(x, -1, 1) == 0
    # 2/3 + 0 + 2*(1/6)
    assert integrate_definite(Poly([Fraction(1, 6), -1, 1]), -1, 1) == 1
    assert integrate_definite(Poly([3, 1]), Fraction(2, 7), Fraction(2, 7)) == 0


def test_evaluate_examples():
    assert evaluate(Poly(), Fraction(3, 4)) == 0
    assert evaluate(Poly([Fraction(1, 6), -1, 1]), 0) == Fraction(1, 6)
    assert evaluate(Poly([Fraction(-1, 2), 0, Fraction(3, 2)]), 1) == 1


def test_factorial_binomial():
    assert factorial(0) == 1
    assert factorial(25) == 15511210043330985984000000
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(ValueError):
        factorial(-1)


def test_rational_text_form():
    assert format_rational(Fraction(-1, 30)) == "-1/30"
    assert format_rational(Fraction(6, 2)) == "3"
    assert format_rational(0) == "0"
    assert parse_rational("-2/4") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    for bad in ["1.5", "1/0", "abc", "1e3", ""]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_poly_text_form_round_trip():
    p = Poly([Fraction(1, 6), -1, 1])
    assert p.to_strings() == ["1/6", "-1", "1"]
    assert poly_from_strings(p.to_strings()) == p


def test_str_rendering():
    assert str(Poly([Fraction(1, 6), -1, 1])) == "x^2 - x + 1/6"
    assert str(Poly([0, -2])) == "-2*x"
    assert str(Poly()) == "0"


@settings(max_examples=60, deadline=None)
@given(polys(15), polys(15), polys(15))
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()


@given(polys(15), polys(15))
def test_degree_of_product(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q).is_zero()


@given(polys(15), rationals)
def test_results_canonical(p, c):
    for v in [evaluate(p, c), integrate_definite(p, c, 1)] + list((p * p).coeffs):
        assert v.denominator > 0
        assert gcd(abs(v.numerator), v.denominator) == 1
    q = p.scale(c)
    assert not q.coeffs or q.coeffs[-1] != 0


@given(polys(15))
def test_antiderivative_round_trip(p):
    assert derivative(antiderivative(p), 1) == p


@given(st.lists(rationals, max_size=11))
def test_odd_polynomials_integrate_to_zero(odd_coeffs):
    cs = []
    for c in odd_coeffs:
        cs += [0, c]
    p = Poly(cs)
    assert p.degree <= 21
    assert integrate_definite(p, -1, 1) == 0


@settings(max_examples=40, deadline=None)
@given(polys(10), rationals, rationals)
def test_integration_matches_sympy(p, a, b):
    expected = sympy.integrate(to_sympy(p), (X, sympy.Rational(a.numerator, a.denominator), sympy.Rational(b.numerator, b.denominator)))
    assert integrate_definite(p, a, b) == frac(expected)


@settings(max_examples=40, deadline=None)
@given(polys(10), rationals)
def test_evaluate_matches_sympy(p, c):
    expected = to_sympy(p).subs(X, sympy.Rational(c.numerator, c.denominator))
    assert evaluate(p, c) == frac(expected)


@given(polys(8), st.integers(min_value=0, max_value=10))
def test_derivative_matches_sympy(p, k):
    from conftest import from_sympy

    assert derivative(p, k) == from_sympy(sympy.diff(to_sympy(p), X, k))


def test_large_integers_do_not_overflow():
    # (n+k+2)! past 64-bit range
    assert factorial(22) > 2**64
    big = Poly.monomial(40, factorial(30))
    assert integrate_definite(big, -1, 1) == Fraction(2 * factorial(30), 41)
