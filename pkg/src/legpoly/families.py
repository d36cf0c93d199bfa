"""Generators for the Legendre, Bernoulli, Euler, Hermite and Bernstein families.

Every sequence is built from a recurrence over exact rationals.  Legendre
polynomials have two independent generators (Rodrigues and the three-term
recurrence) so that each can check the other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .algebra import Poly, binomial, derivative, evaluate, factorial, poly_sum

_X = Poly.x()
_ONE = Poly.constant(1)


class Family(enum.Enum):
    LEGENDRE = "legendre"
    BERNOULLI = "bernoulli"
    EULER = "euler"
    HERMITE = "hermite"
    BERNSTEIN = "bernstein"


@dataclass(frozen=True)
class FamilySpec:
    """A family member: ``kind`` with index ``n`` (and basis index ``k`` for Bernstein)."""

    kind: Family
    n: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"family index must be nonnegative, got {self.n}")
        if self.kind is Family.BERNSTEIN:
            if self.k is None:
                raise ValueError("bernstein requires a basis index k")
            if not 0 <= self.k <= self.n:
                raise ValueError(f"bernstein basis index must satisfy 0 <= k <= n, got k={self.k}, n={self.n}")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} takes no basis index")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"legendre:5"`` or ``"bernstein:2,5"`` (k then n)."""
        name, sep, rest = text.strip().partition(":")
        if not sep:
            raise ValueError(f"family spec needs 'name:index', got {text!r}")
        try:
            kind = Family(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None
        parts = [s.strip() for s in rest.split(",")]
        try:
            nums = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"bad index in family spec {text!r}") from None
        if kind is Family.BERNSTEIN:
            if len(nums) != 2:
                raise ValueError("bernstein spec is 'bernstein:k,n'")
            return cls(kind, nums[1], nums[0])
        if len(nums) != 1:
            raise ValueError(f"{kind.value} spec is '{kind.value}:n'")
        return cls(kind, nums[0])

    def __str__(self) -> str:
        if self.kind is Family.BERNSTEIN:
            return f"bernstein:{self.k},{self.n}"
        return f"{self.kind.value}:{self.n}"

    def generate(self) -> Poly:
        if self.kind is Family.LEGENDRE:
            return legendre(self.n)
        if self.kind is Family.BERNOULLI:
            return bernoulli_poly(self.n)
        if self.kind is Family.EULER:
            return euler_poly(self.n)
        if self.kind is Family.HERMITE:
            return hermite_poly(self.n)
        return bernstein_poly(self.k, self.n)


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")


# Legendre

@lru_cache(maxsize=None)
def legendre_rodrigues(n: int) -> Poly:
    """P_n = 1/(n! 2^n) d^n/dx^n (x^2 - 1)^n."""
    _check_index(n)
    base = Poly((-1, 0, 1)) ** n
    return derivative(base, n).scale(Fraction(1, factorial(n) * 2**n))


@lru_cache(maxsize=None)
def legendre_recurrence(n: int) -> Poly:
    """P_n from (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}."""
    _check_index(n)
    if n == 0:
        return _ONE
    if n == 1:
        return _X
    m = n - 1
    p = legendre_recurrence(m) * _X * (2 * m + 1) - legendre_recurrence(m - 1) * m
    return p.scale(Fraction(1, m + 1))


def legendre(n: int) -> Poly:
    return legendre_recurrence(n)


def legendre_ode_residual(n: int) -> Poly:
    """d/dx[(1 - x^2) P_n'] + n(n+1) P_n, which vanishes identically."""
    p = legendre(n)
    flux = Poly((1, 0, -1)) * derivative(p, 1)
    return derivative(flux, 1) + p.scale(n * (n + 1))


# Bernoulli

@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0."""
    _check_index(n)
    if n == 0:
        return Fraction(1)
    s = sum(binomial(n + 1, k) * bernoulli_number(k) for k in range(n))
    return Fraction(-s, n + 1)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    _check_index(n)
    return Poly(binomial(n, j) * bernoulli_number(n - j) for j in range(n + 1))


# Euler

@lru_cache(maxsize=None)
def euler_poly(n: int) -> Poly:
    """E_n(x) = x^n - 1/2 sum_{k<n} C(n, k) E_k(x)."""
    _check_index(n)
    acc = poly_sum(euler_poly(k).scale(binomial(n, k)) for k in range(n))
    return Poly.monomial(n) - acc.scale(Fraction(1, 2))


def euler_number(n: int) -> Fraction:
    """E_n = 2^n E_n(1/2); always an integer."""
    return 2**n * evaluate(euler_poly(n), Fraction(1, 2))


def euler_at_zero(n: int) -> Fraction:
    return evaluate(euler_poly(n), 0)


# Hermite (physicists')

@lru_cache(maxsize=None)
def hermite_poly(n: int) -> Poly:
    _check_index(n)
    if n == 0:
        return _ONE
    if n == 1:
        return Poly((0, 2))
    m = n - 1
    return hermite_poly(m) * Poly((0, 2)) - hermite_poly(m - 1).scale(2 * m)


def hermite_number(n: int) -> Fraction:
    return evaluate(hermite_poly(n), 0)


# Bernstein

@lru_cache(maxsize=None)
def bernstein_poly(k: int, n: int) -> Poly:
    """C(n, k) x^k (1 - x)^(n - k)."""
    _check_index(n)
    if not 0 <= k <= n:
        raise ValueError(f"bernstein basis index must satisfy 0 <= k <= n, got k={k}, n={n}")
    return (Poly.monomial(k) * Poly((1, -1)) ** (n - k)).scale(binomial(n, k))
