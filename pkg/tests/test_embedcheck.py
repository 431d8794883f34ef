from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from klwv.embedcheck import (
    GramBasis,
    ce_summand_check,
    ce_summand_weight,
    fock_basis_change,
    fock_basis_identity,
    gram_check,
    wdecomp_check,
    wdecomp_weight,
)

F = Fraction
ALL_M = list(range(4, 21))


def test_ce_examples():
    assert ce_summand_weight(4, 1) == 1
    assert ce_summand_weight(4, 0) == 0
    assert ce_summand_weight(6, 3) == 3
    assert ce_summand_weight(5, -2) == 2


@pytest.mark.parametrize("m", ALL_M)
def test_ce_summands(m):
    assert ce_summand_check(m, 100).ok


def test_wdecomp_examples():
    assert wdecomp_weight(4, 1) == F(3, 2)
    assert wdecomp_weight(4, 0) == 0
    assert wdecomp_weight(8, 2) == 3
    with pytest.raises(ValueError):
        wdecomp_check(5, 3)


@pytest.mark.parametrize("m", range(4, 21, 2))
def test_wdecomp(m):
    assert wdecomp_check(m, 100).ok


@pytest.mark.parametrize("m", ALL_M)
def test_gram(m):
    r = gram_check(m)
    assert r.ok
    g = GramBasis(m)
    assert g.inner(g.h, g.h) == -F(m + 2, 2)
    assert g.inner(g.h_bar, g.h_bar) == -F(m, m + 2)


def test_gram_m4_values():
    g = GramBasis(4)
    assert g.inner(g.h, g.h) == -3
    assert g.inner(g.h, g.h_bar) == 0


def test_gram_symbolic_in_m():
    m = sympy.symbols("m", positive=True)
    h = (1, -1)
    hb = (m / (m + 2), 2 / (m + 2))
    norms = (-1, -m / 2)
    ip = lambda x, y: sum(a * b * n for a, b, n in zip(x, y, norms))
    assert sympy.simplify(ip(h, h) + (m + 2) / 2) == 0
    assert sympy.simplify(ip(hb, hb) + m / (m + 2)) == 0
    assert sympy.simplify(ip(h, hb)) == 0


def test_basis_change_examples():
    for m, i, j in [(4, 1, 1), (7, 0, 0), (4, 1, 0)]:
        assert fock_basis_change(m, i, j).ok
    r = fock_basis_change(4, 1, 1)
    assert r.checks[-1].actual == F(-3, 4)
    r = fock_basis_change(4, 1, 0)
    assert r.checks[-1].actual == F(-1, 2)


@pytest.mark.parametrize("m", ALL_M)
def test_basis_polynomial_identity(m):
    assert fock_basis_identity(m).ok


def test_basis_identity_symbolic_in_m():
    m, i, j = sympy.symbols("m i j")
    s, s1, ell = -m / 2, -(m + 2) / 2, -m / (m + 2)
    lhs = -i**2 / 2 + j**2 / (2 * s)
    rhs = (i - j) ** 2 / (2 * s1) + ((m * i + 2 * j) / (m + 2)) ** 2 / (2 * ell)
    assert sympy.simplify(lhs - rhs) == 0


@given(st.integers(4, 30), st.integers(-40, 40), st.integers(-40, 40))
def test_basis_change_random(m, i, j):
    assert fock_basis_change(m, i, j).ok
