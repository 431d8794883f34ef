from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from klwv.extension import delta_atypical
from klwv.liecore import WeightVec
from klwv.qhreduce import (
    delta_theta,
    delta_theta_identity,
    difference_identities,
    eq1_recheck,
    eq1_solutions,
    integral_mu,
    match_reduction,
    pieri_obstruction,
    qhr_top_data,
    sos_certificate,
    sos_difference,
    sos_final,
    sos_intermediate,
    two_param_weight,
)

from conftest import to_sympy

F = Fraction
EVEN = list(range(4, 21, 2))


def test_top_data_examples():
    d = qhr_top_data(4, WeightVec.fundamental(6, 1))
    assert (d.mu, str(d.lam_bar), d.delta) == (F(2, 3), "0,0,0", F(2, 3))
    d = qhr_top_data(4, WeightVec.fundamental(6, 5))
    assert (d.mu, d.delta) == (F(-2, 3), F(2, 3))
    d = qhr_top_data(8, WeightVec.zero(10))
    assert (d.mu, d.delta) == (0, 0) and d.lam_bar == WeightVec.zero(8)
    with pytest.raises(ValueError):
        qhr_top_data(4, WeightVec(6, (-1, 0, 0, 0, 0)))


@given(st.sampled_from(EVEN), st.lists(st.integers(0, 6), min_size=21, max_size=21))
def test_mu_in_lattice(m, xs):
    lam = WeightVec(m + 2, tuple(xs[: m + 1]))
    assert integral_mu(m, lam)


def test_delta_theta_examples():
    assert delta_theta(4, F(1), F(0)) == F(2, 3)
    assert delta_theta(10, F(0), F(0)) == 0
    want = F(225, 6) + F(4, 6) + F(60, 30) + F(15, 2) + 1
    assert delta_theta(4, F(15), F(2)) == want


@pytest.mark.parametrize("m", EVEN)
def test_delta_theta_polynomial_identity(m):
    assert delta_theta_identity(m).ok


@pytest.mark.parametrize("m", EVEN)
def test_sos_chain_by_sympy(m):
    d, mid, fin = (sympy.expand(to_sympy(p)) for p in (sos_difference(m), sos_intermediate(m), sos_final(m)))
    assert sympy.expand(d - mid) == 0
    assert sympy.expand(mid - fin) == 0


@pytest.mark.parametrize("m", EVEN)
def test_sos_certificate(m):
    r = sos_certificate(m)
    assert r.ok, r.failures


def test_sos_grid_example():
    p = sos_intermediate(4)
    assert p.evaluate({"l1": 0, "l2": 1, "ll": 0}) == F(1, 5)


def test_sos_certificate_domain():
    with pytest.raises(ValueError):
        sos_certificate(22)
    with pytest.raises(ValueError):
        sos_certificate(5)


@pytest.mark.parametrize("m", EVEN)
def test_difference_identities(m):
    assert difference_identities(m).ok


def brute_eq1(m, bound):
    out = []
    for l1 in range(bound):
        for ll in range(bound):
            b = l1 - ll + 1
            a = F((l1 - ll) * m, m + 2)
            if b >= 0 and delta_theta(m, F(l1), F(ll)) == delta_atypical(m, a, b, 0):
                out.append((l1, ll))
    return out


def test_eq1_m4():
    assert eq1_solutions(4) == [(15, 2)]


@pytest.mark.parametrize("m", [4, 6, 8, 10])
def test_eq1_matches_brute_force(m):
    sols = eq1_solutions(m)
    bound = max([l1 for l1, _ in sols] + [m]) + 3
    assert sols == brute_eq1(m, bound)


@pytest.mark.parametrize("m", EVEN)
def test_eq1_recheck(m):
    assert eq1_recheck(m).ok
    for l1, ll in eq1_solutions(m):
        assert l1 == -(m + 1) - F(m * m + m, 2 * ll - m - 1)


def test_pieri_obstruction_examples():
    r = pieri_obstruction(4, 15, 2)
    assert r.ok
    rows = r.checks[0].inputs["summands"]
    assert {row["weight"] for row in rows} == {"16,0,0,0,2", "15,0,0,0,1", "14,1,0,0,2"}
    assert not any(row["eq1_match"] for row in rows)
    r0 = pieri_obstruction(4, 0, 0)
    assert [row["weight"] for row in r0.checks[0].inputs["summands"]] == ["1,0,0,0,0"]


@pytest.mark.parametrize("m", EVEN)
def test_pieri_obstruction_no_survivors(m):
    for l1, ll in eq1_solutions(m):
        assert pieri_obstruction(m, l1, ll).ok


def test_match_examples():
    lam, r = match_reduction(4, F(-2, 3), -1)
    assert lam == WeightVec.fundamental(6, 1) and r.ok
    assert r.checks[0].actual == F(2, 3)
    lam, r = match_reduction(6, 0, 0)
    assert lam == WeightVec.zero(8) and r.ok
    lam, r = match_reduction(4, F(4, 3), 2)
    assert lam == two_param_weight(4, 0, 2) and r.ok
    assert r.checks[0].actual == F(5, 3)
    with pytest.raises(ValueError):
        match_reduction(4, F(1, 3), 1)


@given(st.sampled_from(EVEN), st.integers(-30, 30))
def test_match_family(m, b):
    _, r = match_reduction(m, F(b * m, m + 2), b)
    assert r.ok
