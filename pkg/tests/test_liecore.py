import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from klwv.liecore import (
    LieLevel,
    WeightVec,
    fw_inner,
    j0_weight,
    kn_top_weight,
    minimal_reduction_weight,
    pieri_tensor_omega1,
    restrict_glm,
    rho,
    sugawara_weight,
    theta,
    weight_inner,
    weyl_dim,
)

from oracles import root_product_dim

W = WeightVec.fundamental


# --- independent oracles -------------------------------------------------------

def eps_coords(lam):
    """Weight in the orthonormal epsilon basis of gl_N, projected to trace zero."""
    N = lam.N
    v = [Fraction(0)] * N
    for i, c in enumerate(lam.coeffs, 1):
        for k in range(i):
            v[k] += c
    mean = sum(v) / N
    return [x - mean for x in v]


def eps_inner(lam, mu):
    return sum(a * b for a, b in zip(eps_coords(lam), eps_coords(mu)))


def ssyt_count(rows, N):
    """Number of semistandard tableaux of shape ``rows`` with entries 1..N."""
    cells = [(r, c) for r, length in enumerate(rows) for c in range(length)]
    count = 0

    def fill(idx, tab):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, N + 1):
            tab[(r, c)] = v
            fill(idx + 1, tab)
        tab.pop((r, c), None)

    fill(0, {})
    return count


def dominant(N_max=8, size=10):
    return st.integers(2, N_max).flatmap(
        lambda N: st.lists(st.integers(0, size), min_size=N - 1, max_size=N - 1)
        .filter(lambda xs: sum(xs) <= size)
        .map(lambda xs: WeightVec(N, tuple(xs)))
    )


# --- examples --------------------------------------------------------------------

def test_fw_inner_examples():
    assert fw_inner(6, 1, 1) == Fraction(5, 6)
    assert fw_inner(6, 1, 5) == Fraction(1, 6)
    with pytest.raises(ValueError):
        fw_inner(6, 0, 1)


@given(st.integers(2, 12).flatmap(lambda N: st.tuples(st.just(N), st.integers(1, N - 1), st.integers(1, N - 1))))
def test_fw_inner_symmetric_and_matches_eps(args):
    N, i, j = args
    assert fw_inner(N, i, j) == fw_inner(N, j, i) == eps_inner(W(N, i), W(N, j))


def test_weight_inner_examples():
    assert weight_inner(W(6, 1), 2 * rho(6)) == 5
    assert weight_inner(WeightVec.zero(6), W(6, 3)) == 0
    for N in range(3, 12):
        assert weight_inner(theta(N), theta(N)) == 2
    with pytest.raises(ValueError):
        weight_inner(W(5, 1), W(6, 1))


@given(dominant(10, 8))
def test_theta_pairing_is_coefficient_sum(lam):
    if lam.N >= 3:
        assert weight_inner(lam, theta(lam.N)) == lam.size()


@given(dominant(9, 6), dominant(9, 6))
def test_weight_inner_matches_eps_oracle(lam, mu):
    if lam.N == mu.N:
        assert weight_inner(lam, mu) == eps_inner(lam, mu)


def test_sugawara_examples():
    assert sugawara_weight(LieLevel(4, Fraction(-5, 2)), W(4, 1)) == Fraction(5, 4)
    assert sugawara_weight(LieLevel(6, Fraction(-7, 2)), W(6, 1)) == Fraction(7, 6)
    assert sugawara_weight(LieLevel(5, 3), WeightVec.zero(5)) == 0
    with pytest.raises(ValueError, match="critical level"):
        sugawara_weight(LieLevel(4, -4), W(4, 1))


@pytest.mark.parametrize("m", range(4, 21, 2))
def test_sugawara_top_weights_of_simple_currents(m):
    lvl = LieLevel.k_n(m)
    for i in range(0, 51):
        want = Fraction(i * i, m) + i
        assert sugawara_weight(lvl, i * W(m, 1)) == want
        assert sugawara_weight(lvl, i * W(m, m - 1)) == want
        assert sugawara_weight(lvl, kn_top_weight(m, -i)) == want


def test_minimal_reduction_examples():
    lvl = LieLevel(6, Fraction(-7, 2))
    assert minimal_reduction_weight(lvl, W(6, 1)) == Fraction(2, 3)
    assert minimal_reduction_weight(lvl, W(6, 5)) == Fraction(2, 3)
    assert minimal_reduction_weight(lvl, WeightVec.zero(6)) == 0


@pytest.mark.parametrize("m", range(4, 21, 2))
def test_minimal_reduction_two_parameter_polynomial(m):
    """Sugawara minus theta/2 on l1 w1 + ll w_{m+1}, compared symbolically."""
    l1, ll = sympy.symbols("l1 ll")
    N = m + 2
    k = sympy.Rational(-(m + 3), 2)
    coords = [l1] + [0] * (N - 3) + [ll]
    rho_c = [1] * (N - 1)
    ip = lambda x, y: sum(x[i] * y[j] * (min(i + 1, j + 1) - sympy.Rational((i + 1) * (j + 1), N))
                          for i in range(N - 1) for j in range(N - 1))
    lam_plus = [c + 2 * r for c, r in zip(coords, rho_c)]
    generic = ip(coords, lam_plus) / (2 * (k + N)) - (l1 + ll) / 2
    closed = (l1**2 + ll**2) / (m + 2) + 2 * l1 * ll / ((m + 1) * (m + 2)) + (l1 + ll) / 2
    assert sympy.expand(generic - closed) == 0
    lvl = LieLevel(N, Fraction(-(m + 3), 2))
    for a, b in itertools.product(range(4), range(4)):
        lam = WeightVec.from_dict(N, {1: a, N - 1: b})
        assert minimal_reduction_weight(lvl, lam) == Fraction(str(closed.subs({l1: a, ll: b})))


def test_j0_weight_examples():
    assert j0_weight(W(6, 1)) == Fraction(2, 3)
    assert j0_weight(W(6, 5)) == Fraction(-2, 3)
    assert j0_weight(W(6, 1) + W(6, 5)) == 0


@given(st.integers(3, 12), st.integers(0, 20), st.integers(0, 20))
def test_j0_weight_two_parameter(N, a, b):
    lam = WeightVec.from_dict(N, {1: a, N - 1: b})
    assert j0_weight(lam) == Fraction((a - b) * (N - 2), N)


def test_weyl_dim_examples():
    assert weyl_dim(W(4, 1)) == 4
    assert weyl_dim(W(4, 1) + W(4, 3)) == 15
    for m in range(2, 9):
        for i in range(8):
            assert weyl_dim(i * W(m, 1)) == comb(i + m - 1, i)
    with pytest.raises(ValueError):
        weyl_dim(WeightVec(3, (Fraction(1, 2), 0)))
    with pytest.raises(ValueError):
        weyl_dim(WeightVec(3, (-1, 0)))


@given(dominant(8, 10))
def test_weyl_dim_matches_root_product(lam):
    assert weyl_dim(lam) == root_product_dim(lam.N, lam.coeffs)


@pytest.mark.parametrize("N,coeffs", [
    (2, (3,)), (3, (1, 1)), (3, (2, 0)), (3, (0, 2)), (4, (1, 0, 1)), (4, (0, 2, 0)), (4, (1, 1, 0)), (5, (1, 0, 0, 1)),
])
def test_weyl_dim_counts_tableaux(N, coeffs):
    lam = WeightVec(N, coeffs)
    assert weyl_dim(lam) == ssyt_count([r for r in lam.to_partition() if r], N)


def test_pieri_examples():
    N = 6
    out = set(map(str, pieri_tensor_omega1(W(N, 1) + W(N, 5))))
    assert out == {str(2 * W(N, 1) + W(N, 5)), str(W(N, 2) + W(N, 5)), str(W(N, 1))}
    assert [str(w) for w in pieri_tensor_omega1(WeightVec.zero(N))] == [str(W(N, 1))]
    summands = pieri_tensor_omega1(W(N, 5))
    assert {str(w) for w in summands} == {str(W(N, 1) + W(N, 5)), str(WeightVec.zero(N))}
    assert sorted(weyl_dim(w) for w in summands) == [1, 35]
    with pytest.raises(ValueError):
        pieri_tensor_omega1(WeightVec(N, (-1, 0, 0, 0, 0)))


@given(dominant(20, 10))
def test_pieri_dimension_multiplicativity(lam):
    summands = pieri_tensor_omega1(lam)
    assert len({str(w) for w in summands}) == len(summands)
    assert sum(weyl_dim(w) for w in summands) == weyl_dim(lam) * lam.N


def test_restrict_glm_examples():
    mu, bar = restrict_glm(W(6, 1))
    assert (mu, str(bar)) == (Fraction(2, 3), "0,0,0")
    mu, bar = restrict_glm(W(6, 2))
    assert (mu, str(bar)) == (Fraction(1, 3), "1,0,0")
    mu, bar = restrict_glm(WeightVec.zero(8))
    assert mu == 0 and bar == WeightVec.zero(6)
    with pytest.raises(ValueError):
        restrict_glm(W(4, 1))


def test_partition_roundtrip():
    lam = WeightVec(5, (2, 0, 1, 3))
    assert WeightVec.from_partition(5, lam.to_partition()) == lam
    assert WeightVec.parse("2,0,1,3") == lam
