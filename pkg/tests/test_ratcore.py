from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from klwv.ratcore import (
    HalfInt,
    MPoly,
    Phase,
    fmt_rat,
    frac_mod,
    parse_rat,
    phase_add,
    poly_equal,
    rat_canonical,
)

from conftest import to_sympy

ints = st.integers(-10**6, 10**6)
nonzero = ints.filter(lambda q: q != 0)
rats = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 60))


@pytest.mark.parametrize("p,q,want", [(2, 4, Fraction(1, 2)), (-5, -10, Fraction(1, 2)), (7, 1, Fraction(7))])
def test_rat_canonical_examples(p, q, want):
    assert rat_canonical(p, q) == want


def test_rat_canonical_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="zero denominator"):
        rat_canonical(1, 0)


@given(ints, nonzero)
def test_rat_canonical_matches_sympy(p, q):
    r = rat_canonical(p, q)
    s = sympy.Rational(p, q)
    assert (r.numerator, r.denominator) == (int(s.p), int(s.q))
    assert r.denominator > 0
    assert rat_canonical(r.numerator, r.denominator) == r


@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(rats)
def test_parse_fmt_roundtrip(x):
    assert parse_rat(fmt_rat(x)) == x


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "a/b", "3/", "0.25"])
def test_parse_rejects_decimals_and_garbage(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rat("3/0")


def test_halfint():
    assert HalfInt.of(Fraction(3, 2)).doubled == 3
    assert HalfInt.of(Fraction(1, 2)) + HalfInt.of(Fraction(1, 2)) == 1
    assert HalfInt.of(1) < HalfInt.of(Fraction(3, 2))
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_halfint_closed_and_ordered(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).doubled == a + b
    assert (x < y) == (Fraction(a, 2) < Fraction(b, 2))


@pytest.mark.parametrize("x,y,want", [
    (Fraction(3, 2), Fraction(1, 2), Fraction(0)),
    (Fraction(0), Fraction(5, 7), Fraction(5, 7)),
    (Fraction(7, 6), Fraction(5, 6), Fraction(0)),
])
def test_phase_add_examples(x, y, want):
    assert phase_add(Phase(x), Phase(y)).residue == want


@given(rats, rats, rats)
def test_phase_group(x, y, z):
    px, py, pz = Phase(x), Phase(y), Phase(z)
    assert 0 <= px.residue < 2
    assert phase_add(phase_add(px, py), pz) == phase_add(px, phase_add(py, pz))
    assert phase_add(px, -px).is_trivial()
    assert phase_add(px, Phase(0)) == px


@given(rats, st.integers(1, 5))
def test_frac_mod_range(x, n):
    r = frac_mod(x, n)
    assert 0 <= r < n and (x - r) % n == 0


X, Y = MPoly.gens(("x", "y"))


def test_poly_equal_examples():
    assert poly_equal((X + Y) ** 2, X * X + 2 * X * Y + Y * Y)
    assert poly_equal(X - X, MPoly.const(("x", "y"), 0))
    assert not poly_equal(X * X, X * X + 1)


def test_poly_equal_mismatched_variables():
    (Z,) = MPoly.gens(("z",))
    with pytest.raises(ValueError):
        poly_equal(X, Z)


def test_no_zero_coefficients_stored():
    p = X * Y - Y * X
    assert p.terms == {}


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), rats, max_size=5
).map(lambda d: MPoly(("x", "y"), d))


@given(polys, polys)
def test_poly_equal_iff_difference_zero(p, q):
    assert poly_equal(p, q) == poly_equal(p - q, MPoly.const(("x", "y"), 0))


@given(polys, polys, polys)
def test_mpoly_ring_ops_match_sympy(p, q, r):
    lhs = to_sympy(p * (q + r) - q ** 2)
    rhs = sympy.expand(to_sympy(p) * (to_sympy(q) + to_sympy(r)) - to_sympy(q) ** 2)
    assert sympy.expand(lhs - rhs) == 0


@given(polys, rats, rats)
def test_mpoly_evaluate_matches_sympy(p, a, b):
    x, y = sympy.symbols("x y")
    val = to_sympy(p).subs({x: sympy.Rational(a.numerator, a.denominator), y: sympy.Rational(b.numerator, b.denominator)})
    assert p.evaluate({"x": a, "y": b}) == Fraction(int(sympy.Rational(val).p), int(sympy.Rational(val).q))
