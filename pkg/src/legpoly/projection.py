"""Legendre-basis expansion of rational polynomials.

Coefficients can be computed three ways:

* ``ORACLE``: ``C_k = (2k+1)/2 * <q, P_k>`` by direct exact integration.
* ``PROP1``: integrate ``q`` against the Rodrigues integrand
  ``d^k/dx^k (x^2 - 1)^k`` and scale by ``(2k+1)/(k! 2^(k+1))``.
* ``CLOSED_FORM``: combine the closed-form Legendre coefficients of each
  monomial ``x^j`` (see :func:`monomial_coefficient`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Poly, derivative, factorial, format_rational, integrate_definite, mul, poly_sum
from .families import legendre


class Route(enum.Enum):
    ORACLE = "oracle"
    PROP1 = "prop1"
    CLOSED_FORM = "closed-form"


class DegreeBoundError(ValueError):
    """The polynomial does not fit in the requested Legendre basis."""


def inner_product(p: Poly, q: Poly) -> Fraction:
    """Integral of ``p*q`` over [-1, 1]."""
    return integrate_definite(mul(p, q), -1, 1)


def orthogonality_value(m: int, n: int) -> Fraction:
    return inner_product(legendre(m), legendre(n))


@lru_cache(maxsize=None)
def _rodrigues_integrand(k: int) -> Poly:
    return derivative(Poly((-1, 0, 1)) ** k, k)


def coefficient_oracle(q: Poly, k: int) -> Fraction:
    return Fraction(2 * k + 1, 2) * inner_product(q, legendre(k))


def coefficient_prop1(q: Poly, k: int) -> Fraction:
    """k-th Legendre coefficient of ``q`` through the Rodrigues integrand."""
    if k < 0:
        raise ValueError("coefficient index must be nonnegative")
    scale = Fraction(2 * k + 1, factorial(k) * 2 ** (k + 1))
    return scale * integrate_definite(mul(_rodrigues_integrand(k), q), -1, 1)


@lru_cache(maxsize=None)
def monomial_term(j: int, k: int) -> Fraction:
    """j! ((j+k+2)/2)! / (((j-k)/2)! (j+k+2)!), or 0 when j < k or j - k is odd.

    Every parity-restricted sum in the library goes through this function;
    excluded indices contribute 0 because the matching integral of
    ``P_k * x^j`` vanishes there.
    """
    if j < 0 or k < 0:
        raise ValueError("monomial_term indices must be nonnegative")
    if j < k or (j - k) % 2:
        return Fraction(0)
    return Fraction(
        factorial(j) * factorial((j + k + 2) // 2),
        factorial((j - k) // 2) * factorial(j + k + 2),
    )


def legendre_prefactor(k: int) -> int:
    """The factor 2^(k+2) k + 2^(k+1) written as it appears in the expansion theorems."""
    return 2 ** (k + 2) * k + 2 ** (k + 1)


def monomial_coefficient(n: int, k: int) -> Fraction:
    """Closed-form k-th Legendre coefficient of x^n.

    ``(2k+1) 2^(k+1) n! ((n+k+2)/2)! / ((n+k+2)! ((n-k)/2)!)`` when ``n - k``
    is even and ``k <= n``; zero otherwise.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    return (2 * k + 1) * 2 ** (k + 1) * monomial_term(n, k)


@dataclass(frozen=True)
class LegendreExpansion:
    """Coefficients ``C_0..C_N`` of a polynomial in the Legendre basis."""

    coefficients: tuple[Fraction, ...]
    source: Route = Route.ORACLE

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: LegendreExpansion) -> LegendreExpansion:
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        a = a + (Fraction(0),) * (size - len(a))
        b = b + (Fraction(0),) * (size - len(b))
        return LegendreExpansion(tuple(x + y for x, y in zip(a, b)), self.source)

    def scale(self, c) -> LegendreExpansion:
        c = Fraction(c)
        return LegendreExpansion(tuple(c * x for x in self.coefficients), self.source)

    def to_json(self) -> dict:
        return {
            "basis": "legendre",
            "coefficients": [format_rational(c) for c in self.coefficients],
            "source": self.source.value,
        }


def expand(q: Poly, degree_bound: int | None = None, route: Route = Route.ORACLE) -> LegendreExpansion:
    """Expand ``q`` as ``sum_{k=0}^{degree_bound} C_k P_k``.

    ``degree_bound`` defaults to ``max(deg q, 0)``; a smaller bound raises
    :class:`DegreeBoundError`.
    """
    if degree_bound is None:
        degree_bound = max(len(q.coeffs) - 1, 0)
    if degree_bound < 0:
        raise DegreeBoundError("degree bound must be nonnegative")
    if q.degree > degree_bound:
        raise DegreeBoundError(f"degree {q.degree} polynomial does not fit below degree bound {degree_bound}")
    route = Route(route)
    if route is Route.ORACLE:
        cs = [coefficient_oracle(q, k) for k in range(degree_bound + 1)]
    elif route is Route.PROP1:
        cs = [coefficient_prop1(q, k) for k in range(degree_bound + 1)]
    else:
        cs = [
            sum((a * monomial_coefficient(j, k) for j, a in enumerate(q.coeffs)), Fraction(0))
            for k in range(degree_bound + 1)
        ]
    return LegendreExpansion(tuple(cs), route)


def reconstruct(e: LegendreExpansion | list | tuple) -> Poly:
    """``sum_k C_k P_k`` as a monomial-basis polynomial."""
    cs = e.coefficients if isinstance(e, LegendreExpansion) else e
    return poly_sum(legendre(k).scale(c) for k, c in enumerate(cs) if c != 0)
