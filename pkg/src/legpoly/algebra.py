"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
reduced form with a positive denominator.  A :class:`Poly` stores its
coefficients in ascending degree and is immutable; the zero polynomial is the
empty tuple.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``; no decimals, no exponents."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Scalar) -> str:
    return str(Fraction(value))


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self._coeffs[0::2])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                body = xpart if mag == 1 else f"{format_rational(mag)}*{xpart}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __add__(self, other: Poly | Scalar) -> Poly:
        return add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return add(self, -_lift(other))

    def __rsub__(self, other: Poly | Scalar) -> Poly:
        return add(_lift(other), -self)

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1)
        base = self
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        return evaluate(self, x0)

    def scale(self, c: Scalar) -> Poly:
        c = Fraction(c)
        return Poly(c * a for a in self._coeffs)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]


def _lift(p: Poly | Scalar) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(out)


def mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Poly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Poly(out)


def derivative(p: Poly, k: int = 1) -> Poly:
    """k-fold formal derivative."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = p.coeffs
    if k == 0:
        return p
    # d^k/dx^k x^i = i!/(i-k)! x^(i-k)
    return Poly(cs[i] * math.perm(i, k) for i in range(k, len(cs)))


def antiderivative(p: Poly) -> Poly:
    """Term-wise antiderivative with zero constant term."""
    return Poly([0] + [c / (i + 1) for i, c in enumerate(p.coeffs)])


def evaluate(p: Poly, x0: Scalar) -> Fraction:
    """Horner evaluation at a rational point."""
    x0 = Fraction(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def integrate_definite(p: Poly, a: Scalar, b: Scalar) -> Fraction:
    """Exact value of the integral of ``p`` from ``a`` to ``b``."""
    prim = antiderivative(p)
    return evaluate(prim, b) - evaluate(prim, a)


def factorial(n: int) -> int:
    # A negative argument always means a caller violated a parity/range guard.
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly()
    for p in polys:
        total = add(total, p)
    return total


def poly_from_strings(items: Sequence[str | int]) -> Poly:
    return Poly(parse_rational(str(s)) for s in items)
