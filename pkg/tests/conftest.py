from fractions import Fraction

import sympy
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def to_sympy(poly):
    """MPoly -> sympy expression, for identity checks by an independent CAS."""
    syms = sympy.symbols(poly.variables)
    if len(poly.variables) == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    expr = sympy.Integer(0)
    for mono, c in poly.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, mono):
            term *= s**e
        expr += term
    return expr


def sympy_to_fraction(value):
    value = sympy.nsimplify(value)
    return Fraction(int(value.p), int(value.q))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
