from fractions import Fraction

import pytest

import sympy
from hypothesis import strategies as st

from legpoly.algebra import Poly

X = sympy.Symbol("x")

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)


def polys(max_degree=12):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def to_sympy(p: Poly):
    return sum((sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(p.coeffs)), sympy.Integer(0))


def from_sympy(expr) -> Poly:
    cs = sympy.Poly(sympy.expand(expr), X).all_coeffs()[::-1]
    return Poly(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs)


def frac(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


_ACCEPTANCE: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and item.function.__doc__:
        name = item.function.__doc__.strip().splitlines()[0]
        if rep.when == "call" or rep.failed:
            if rep.failed:
                _ACCEPTANCE[name] = "FAIL"
            else:
                _ACCEPTANCE.setdefault(name, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{verdict}  {name}")
