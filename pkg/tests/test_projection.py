from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from legpoly.algebra import Poly
from legpoly.families import bernoulli_poly, hermite_poly, legendre
from legpoly.projection import (
    DegreeBoundError,
    LegendreExpansion,
    Route,
    coefficient_oracle,
    coefficient_prop1,
    expand,
    inner_product,
    legendre_prefactor,
    monomial_coefficient,
    monomial_term,
    orthogonality_value,
    reconstruct,
)

from conftest import X, frac, polys, rationals, to_sympy

F = Fraction


def sympy_coefficient(q: Poly, k: int) -> Fraction:
    integral = sympy.integrate(sympy.legendre(k, X) * to_sympy(q), (X, -1, 1))
    return frac(sympy.Rational(2 * k + 1, 2) * integral)


def test_inner_product_examples():
    one = Poly([1])
    assert inner_product(one, one) == 2
    assert inner_product(Poly.x(), Poly.monomial(2)) == 0
    assert inner_product(legendre(2), legendre(2)) == F(2, 5)


@settings(max_examples=50, deadline=None)
@given(polys(8), polys(8), polys(8), rationals)
def test_inner_product_symmetric_bilinear(p, q, r, a):
    assert inner_product(p, q) == inner_product(q, p)
    assert inner_product(p.scale(a) + r, q) == a * inner_product(p, q) + inner_product(r, q)
    assert inner_product(p, p) >= 0
    assert (inner_product(p, p) == 0) == p.is_zero()


def test_orthogonality_examples():
    assert orthogonality_value(0, 0) == 2
    assert orthogonality_value(1, 3) == 0
    assert orthogonality_value(4, 4) == F(2, 9)


def test_orthogonality_grid():
    for m in range(21):
        for n in range(21):
            assert orthogonality_value(m, n) == (F(2, 2 * n + 1) if m == n else 0)


def test_coefficient_prop1_examples():
    x2 = Poly.monomial(2)
    assert coefficient_prop1(x2, 1) == 0
    assert coefficient_prop1(x2, 2) == F(2, 3)
    assert coefficient_prop1(bernoulli_poly(2), 1) == -1


def test_expand_examples():
    assert expand(legendre(3), 3).coefficients == (0, 0, 0, 1)
    assert expand(Poly.monomial(2), 2).coefficients == (F(1, 3), 0, F(2, 3))
    assert expand(bernoulli_poly(2), 2).coefficients == (F(1, 2), -1, F(2, 3))


def test_expand_embeds_in_larger_basis():
    e = expand(Poly.x(), 4)
    assert e.coefficients == (0, 1, 0, 0, 0)
    assert e.degree_bound == 4


def test_expand_rejects_small_bound():
    with pytest.raises(DegreeBoundError):
        expand(Poly.monomial(3), 2)


def test_expand_zero_polynomial():
    assert expand(Poly(), 0).coefficients == (0,)
    assert reconstruct(expand(Poly(), 3)) == Poly()


def test_reconstruct_examples():
    assert reconstruct(LegendreExpansion((0, 0, 0))) == Poly()
    assert reconstruct(LegendreExpansion((F(1, 2), -1, F(2, 3)))) == Poly([F(1, 6), -1, 1])
    h4 = hermite_poly(4)
    assert reconstruct(expand(h4, 4)) == h4


@pytest.mark.parametrize("q", [bernoulli_poly(5), hermite_poly(6), Poly([F(3, 7), 0, F(-1, 2), 5])])
def test_oracle_agrees_with_sympy(q):
    n = int(q.degree)
    assert list(expand(q, n).coefficients) == [sympy_coefficient(q, k) for k in range(n + 1)]


def test_monomial_coefficient_examples():
    assert monomial_coefficient(2, 1) == 0
    assert monomial_coefficient(2, 0) == F(1, 3)
    assert monomial_coefficient(3, 1) == F(3, 5)
    assert monomial_coefficient(2, 5) == 0


def test_monomial_coefficient_matches_prop1():
    for n in range(21):
        xn = Poly.monomial(n)
        for k in range(n + 1):
            assert monomial_coefficient(n, k) == coefficient_prop1(xn, k)


def test_monomial_term_zero_convention():
    assert monomial_term(1, 2) == 0
    assert monomial_term(3, 0) == 0
    assert monomial_term(0, 0) == F(1, 2)
    assert monomial_term(2, 0) == F(1, 6)


def test_prefactor_verbatim():
    for k in range(10):
        assert legendre_prefactor(k) == 2 ** (k + 1) * (2 * k + 1)
    assert legendre_prefactor(0) == 2


@settings(max_examples=200, deadline=None)
@given(polys(12))
def test_routes_agree_and_round_trip(q):
    n = max(int(q.degree), 0) if not q.is_zero() else 0
    oracle = expand(q, n, Route.ORACLE)
    prop1 = expand(q, n, Route.PROP1)
    closed = expand(q, n, Route.CLOSED_FORM)
    assert oracle.coefficients == prop1.coefficients == closed.coefficients
    assert reconstruct(oracle) == q


@settings(max_examples=60, deadline=None)
@given(polys(10), polys(10), rationals, rationals)
def test_linearity(p, q, a, b):
    lhs = expand(p.scale(a) + q.scale(b), 10)
    rhs = expand(p, 10).scale(a) + expand(q, 10).scale(b)
    assert lhs.coefficients == rhs.coefficients


@given(polys(12))
def test_parity(q):
    even = Poly(c if i % 2 == 0 else 0 for i, c in enumerate(q.coeffs))
    odd = q - even
    e_even = expand(even, 12).coefficients
    e_odd = expand(odd, 12).coefficients
    assert all(c == 0 for c in e_even[1::2])
    assert all(c == 0 for c in e_odd[0::2])


def test_expansion_json():
    e = expand(bernoulli_poly(2), 2)
    assert e.to_json() == {"basis": "legendre", "coefficients": ["1/2", "-1", "2/3"], "source": "oracle"}
    assert expand(bernoulli_poly(2), 2, Route.PROP1).to_json()["source"] == "prop1"


def test_coefficient_oracle_equals_prop1_on_bernoulli():
    q = bernoulli_poly(2)
    for k in range(3):
        assert coefficient_oracle(q, k) == coefficient_prop1(q, k)
