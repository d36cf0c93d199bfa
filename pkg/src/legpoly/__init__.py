"""Exact Legendre-basis expansions of classical polynomial families."""

__version__ = "0.1.0"

from .algebra import Poly, binomial, derivative, evaluate, factorial, integrate_definite
from .families import (
    Family,
    FamilySpec,
    bernoulli_number,
    bernoulli_poly,
    bernstein_poly,
    euler_at_zero,
    euler_number,
    euler_poly,
    hermite_number,
    hermite_poly,
    legendre,
    legendre_ode_residual,
    legendre_recurrence,
    legendre_rodrigues,
)
from .identities import IdentityId, IdentityReport, Params, Variant, verify, verify_range
from .projection import (
    LegendreExpansion,
    Route,
    coefficient_prop1,
    expand,
    inner_product,
    monomial_coefficient,
    orthogonality_value,
    reconstruct,
)
