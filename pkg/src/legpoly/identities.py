"""Exact verification of the Legendre-expansion identities.

Each identity has a left-hand side built straight from the family
generators and a right-hand side evaluated exactly as printed.  Both sides are
compared as fully expanded monomial-basis polynomials; the difference is kept
as a witness.  Three identities carry a registered correction that is applied
mechanically and re-checked.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import Poly, binomial, poly_sum
from .families import (
    bernoulli_number,
    bernoulli_poly,
    bernstein_poly,
    euler_at_zero,
    euler_number,
    euler_poly,
    hermite_number,
    hermite_poly,
    legendre,
)
from .projection import inner_product, legendre_prefactor, monomial_coefficient, monomial_term, reconstruct


class IdentityId(enum.Enum):
    ORTHOGONALITY = "orthogonality"
    MONOMIAL_EQ15 = "monomial-eq15"
    THM_BERNOULLI = "thm-bernoulli"
    THM_HERMITE = "thm-hermite"
    THM_BERNSTEIN = "thm-bernstein"
    EQ14_BERNOULLI_CONV = "eq14-bernoulli-conv"
    KIM_EULER_CONV = "kim-euler-conv"
    THM_BERNOULLI_CONV_LEGENDRE = "thm-bernoulli-conv-legendre"
    THM_EULER_CONV_LEGENDRE = "thm-euler-conv-legendre"


class Variant(enum.Enum):
    """Reading of the undefined symbol E_{n-l+1} in the Euler convolutions."""

    EULER_NUMBER = "euler-number"
    EULER_AT_ZERO = "euler-at-zero"


EULER_IDENTITIES = frozenset({IdentityId.KIM_EULER_CONV, IdentityId.THM_EULER_CONV_LEGENDRE})


@dataclass(frozen=True)
class Params:
    n: int
    j: Optional[int] = None
    m: Optional[int] = None
    variant: Optional[Variant] = None

    def to_json(self) -> dict:
        out: dict = {"n": self.n}
        if self.m is not None:
            out["m"] = self.m
        if self.j is not None:
            out["j"] = self.j
        if self.variant is not None:
            out["variant"] = self.variant.value
        return out

    def sort_key(self) -> tuple:
        return (
            self.n,
            -1 if self.m is None else self.m,
            -1 if self.j is None else self.j,
            "" if self.variant is None else self.variant.value,
        )


class InvalidParams(ValueError):
    pass


def validate(identity: IdentityId, params: Params) -> Params:
    """Check params for ``identity`` and fill the default Euler variant."""
    if params.n < 0:
        raise InvalidParams("n must be nonnegative")
    if identity is IdentityId.ORTHOGONALITY:
        if params.m is None or params.m < 0:
            raise InvalidParams("orthogonality needs a nonnegative m")
    elif params.m is not None:
        raise InvalidParams(f"{identity.value} takes no m")
    if identity is IdentityId.THM_BERNSTEIN:
        if params.j is None or not 0 <= params.j <= params.n:
            raise InvalidParams("thm-bernstein needs 0 <= j <= n")
    elif params.j is not None:
        raise InvalidParams(f"{identity.value} takes no j")
    if identity in EULER_IDENTITIES:
        if params.variant is None:
            return Params(params.n, variant=Variant.EULER_AT_ZERO)
    elif params.variant is not None:
        raise InvalidParams(f"{identity.value} takes no variant")
    return params


def _euler_symbol(variant: Variant) -> Callable[[int], Fraction]:
    return euler_number if variant is Variant.EULER_NUMBER else euler_at_zero


# Left-hand sides

def _bernoulli_convolution(n: int) -> Poly:
    return poly_sum(bernoulli_poly(k) * bernoulli_poly(n - k) for k in range(n + 1))


def _euler_convolution(n: int) -> Poly:
    return poly_sum(euler_poly(k) * euler_poly(n - k) for k in range(n + 1))


def lhs_oracle(identity: IdentityId, params: Params) -> Poly:
    identity = IdentityId(identity)
    params = validate(identity, params)
    n = params.n
    if identity is IdentityId.ORTHOGONALITY:
        return Poly.constant(inner_product(legendre(params.m), legendre(n)))
    if identity is IdentityId.MONOMIAL_EQ15:
        return Poly.monomial(n)
    if identity is IdentityId.THM_BERNOULLI:
        return bernoulli_poly(n)
    if identity is IdentityId.THM_HERMITE:
        return hermite_poly(n)
    if identity is IdentityId.THM_BERNSTEIN:
        return bernstein_poly(params.j, n)
    if identity in (IdentityId.EQ14_BERNOULLI_CONV, IdentityId.THM_BERNOULLI_CONV_LEGENDRE):
        return _bernoulli_convolution(n)
    return _euler_convolution(n)


# Literal right-hand sides.  Legendre-basis theorems produce a coefficient list.

def _thm_bernoulli_coefficients(n: int) -> list[Fraction]:
    out = []
    for k in range(n + 1):
        inner = sum(
            (_bernoulli_term(n, j, k) for j in range(n + 1)),
            Fraction(0),
        )
        out.append(2 * legendre_prefactor(k) * inner)
    return out


def _bernoulli_term(n: int, j: int, k: int) -> Fraction:
    return binomial(n, j) * monomial_term(j, k) * bernoulli_number(n - j)


def _thm_hermite_coefficients(n: int) -> list[Fraction]:
    return [
        legendre_prefactor(k)
        * sum(
            (2**j * binomial(n, j) * monomial_term(j, k) * hermite_number(n - j) for j in range(n + 1)),
            Fraction(0),
        )
        for k in range(n + 1)
    ]


def _thm_bernstein_coefficients(j: int, n: int) -> list[Fraction]:
    return [
        legendre_prefactor(k)
        * sum(
            (binomial(n - j, l) * (-1) ** l * monomial_term(l + j, k) for l in range(n - j + 1)),
            Fraction(0),
        )
        for k in range(n + 1)
    ]


def _thm_bernoulli_conv_coefficients(n: int) -> list[Fraction]:
    out = []
    for k in range(n + 1):
        first = Fraction(0)
        for l in range(n - 1):  # l = 0..n-2, empty when n < 2
            for j in range(l + 1):
                first += (
                    bernoulli_number(n - l)
                    * bernoulli_number(l - j)
                    * binomial(n + 2, l)
                    * binomial(l, j)
                    * monomial_term(j, k)
                )
        second = sum(
            (binomial(n, l) * bernoulli_number(n - l) * monomial_term(l, k) for l in range(n + 1)),
            Fraction(0),
        )
        out.append(legendre_prefactor(k) * (Fraction(2, n + 2) * first + (n + 1) * second))
    return out


def _thm_euler_conv_coefficients(n: int, variant: Variant) -> list[Fraction]:
    e = _euler_symbol(variant)
    out = []
    for k in range(n + 1):
        braces = Fraction(0)
        for l in range(n + 1):
            for j in range(l + 1):
                braces += (
                    binomial(n + 2, l)
                    * binomial(l, j)
                    * e(n - l + 1)
                    * bernoulli_number(l - j)
                    * monomial_term(j, k)
                )
        out.append(Fraction(-8, n + 2) * (2 ** (k + 1) * k + 2**k) * braces)
    return out


def rhs_literal_coefficients(identity: IdentityId, params: Params) -> list[Fraction]:
    """Legendre coefficients of the printed right-hand side (Legendre-basis identities only)."""
    identity = IdentityId(identity)
    params = validate(identity, params)
    n = params.n
    if identity is IdentityId.MONOMIAL_EQ15:
        return [monomial_coefficient(n, k) for k in range(n + 1)]
    if identity is IdentityId.THM_BERNOULLI:
        return _thm_bernoulli_coefficients(n)
    if identity is IdentityId.THM_HERMITE:
        return _thm_hermite_coefficients(n)
    if identity is IdentityId.THM_BERNSTEIN:
        return _thm_bernstein_coefficients(params.j, n)
    if identity is IdentityId.THM_BERNOULLI_CONV_LEGENDRE:
        return _thm_bernoulli_conv_coefficients(n)
    if identity is IdentityId.THM_EULER_CONV_LEGENDRE:
        return _thm_euler_conv_coefficients(n, params.variant)
    raise ValueError(f"{identity.value} is not stated in the Legendre basis")


def _eq14_rhs(n: int) -> Poly:
    head = poly_sum(
        bernoulli_poly(l).scale(binomial(n + 2, l) * bernoulli_number(n - l)) for l in range(n - 1)
    )
    return head.scale(Fraction(2, n + 2)) + bernoulli_poly(n).scale(n + 1)


def _kim_euler_rhs(n: int, variant: Variant) -> Poly:
    e = _euler_symbol(variant)
    acc = poly_sum(bernoulli_poly(l).scale(binomial(n + 2, l) * e(n - l + 1)) for l in range(n + 1))
    return acc.scale(Fraction(-4, n + 2))


def rhs_literal(identity: IdentityId, params: Params) -> Poly:
    identity = IdentityId(identity)
    params = validate(identity, params)
    n = params.n
    if identity is IdentityId.ORTHOGONALITY:
        return Poly.constant(Fraction(2, 2 * n + 1) if params.m == n else 0)
    if identity is IdentityId.EQ14_BERNOULLI_CONV:
        return _eq14_rhs(n)
    if identity is IdentityId.KIM_EULER_CONV:
        return _kim_euler_rhs(n, params.variant)
    return reconstruct(rhs_literal_coefficients(identity, params))


# Corrections registry

@dataclass(frozen=True)
class Correction:
    note: str
    apply: Callable[[Params], Poly]


def _corrected_bernoulli(params: Params) -> Poly:
    cs = rhs_literal_coefficients(IdentityId.THM_BERNOULLI, params)
    return reconstruct([c / 2 for c in cs])


def _corrected_bernstein(params: Params) -> Poly:
    cs = rhs_literal_coefficients(IdentityId.THM_BERNSTEIN, params)
    factor = binomial(params.n, params.j)
    return reconstruct([c * factor for c in cs])


def _at_zero(identity: IdentityId) -> Callable[[Params], Poly]:
    def apply(params: Params) -> Poly:
        return rhs_literal(identity, Params(params.n, variant=Variant.EULER_AT_ZERO))

    return apply


CORRECTIONS: dict[IdentityId, Correction] = {
    IdentityId.THM_BERNOULLI: Correction("drop leading factor 2", _corrected_bernoulli),
    IdentityId.THM_BERNSTEIN: Correction("multiply by binomial(n,j)", _corrected_bernstein),
    IdentityId.KIM_EULER_CONV: Correction(
        "interpret E_{n-l+1} as E_{n-l+1}(0)", _at_zero(IdentityId.KIM_EULER_CONV)
    ),
    IdentityId.THM_EULER_CONV_LEGENDRE: Correction(
        "interpret E_{n-l+1} as E_{n-l+1}(0)", _at_zero(IdentityId.THM_EULER_CONV_LEGENDRE)
    ),
}


def expected_literal(identity: IdentityId, params: Params) -> bool:
    """Registered literal verdict, confirmed against the integration oracle."""
    identity = IdentityId(identity)
    params = validate(identity, params)
    if identity is IdentityId.THM_BERNOULLI:
        return False
    if identity is IdentityId.THM_BERNSTEIN:
        return binomial(params.n, params.j) == 1
    if identity in EULER_IDENTITIES:
        return params.variant is Variant.EULER_AT_ZERO
    return True


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    params: Params
    literal_pass: bool
    corrected_pass: Optional[bool]
    correction_note: str
    witness: Poly
    expected_literal: bool

    @property
    def matches_expected(self) -> bool:
        if self.literal_pass != self.expected_literal:
            return False
        # every registered correction is expected to hold
        return self.corrected_pass is not False

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "params": self.params.to_json(),
            "literal_pass": self.literal_pass,
            "corrected_pass": self.corrected_pass,
            "correction_note": self.correction_note,
            "witness": self.witness.to_strings(),
            "expected_literal": self.expected_literal,
            "matches_expected": self.matches_expected,
        }


def verify(identity: IdentityId, params: Params) -> IdentityReport:
    identity = IdentityId(identity)
    params = validate(identity, params)
    lhs = lhs_oracle(identity, params)
    witness = rhs_literal(identity, params) - lhs
    correction = CORRECTIONS.get(identity)
    corrected_pass = None
    note = ""
    if correction is not None:
        corrected_pass = correction.apply(params) == lhs
        note = correction.note
    return IdentityReport(
        identity=identity,
        params=params,
        literal_pass=witness.is_zero(),
        corrected_pass=corrected_pass,
        correction_note=note,
        witness=witness,
        expected_literal=expected_literal(identity, params),
    )


def admissible_params(identity: IdentityId, n_max: int, variant: Variant | None = None) -> list[Params]:
    """All parameter tuples with n <= n_max, in lexicographic order."""
    identity = IdentityId(identity)
    if variant is not None and identity not in EULER_IDENTITIES:
        raise InvalidParams(f"{identity.value} takes no variant")
    out = []
    for n in range(n_max + 1):
        if identity is IdentityId.ORTHOGONALITY:
            out.extend(Params(n, m=m) for m in range(n_max + 1))
        elif identity is IdentityId.THM_BERNSTEIN:
            out.extend(Params(n, j=j) for j in range(n + 1))
        elif identity in EULER_IDENTITIES:
            variants = [variant] if variant is not None else list(Variant)
            out.extend(Params(n, variant=v) for v in variants)
        else:
            out.append(Params(n))
    return sorted(out, key=Params.sort_key)


def verify_range(identity: IdentityId, n_max: int, variant: Variant | None = None) -> list[IdentityReport]:
    return [verify(identity, p) for p in admissible_params(identity, n_max, variant)]


def verify_all(n_max: int) -> list[IdentityReport]:
    reports = []
    for identity in IdentityId:
        reports.extend(verify_range(identity, n_max))
    return reports
