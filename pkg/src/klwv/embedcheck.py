"""Top-weight bookkeeping for the conformal embedding gl_m -> sl_{m+1} and the
free-field basis change between (J^S, J^1) and (h, h_bar).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .extension import check_m, heisenberg_level
from .freefield import Atypical, FockModule, fock_delta, singlet_delta
from .liecore import LieLevel, kn_top_weight, sugawara_weight
from .ratcore import MPoly
from .report import Report


def _check_m_any(m: int) -> None:
    if not isinstance(m, int) or m < 4:
        raise ValueError(f"m must be an integer >= 4, got {m}")


def ce_summand_weight(m: int, i: int) -> Fraction:
    """Sugawara weight of |i| w_1 (or |i| w_{m-1}) plus the weight of F^{-m/2}_i."""
    _check_m_any(m)
    sug = sugawara_weight(LieLevel.k_n(m), kn_top_weight(m, i))
    return sug + fock_delta(FockModule(Fraction(-m, 2), i))


def ce_summand_check(m: int, range_: int) -> Report:
    _check_m_any(m)
    report = Report("ce_summand")
    bad = [i for i in range(-range_, range_ + 1) if ce_summand_weight(m, i) != abs(i)]
    report.add(f"ce_summand/m={m}", [], bad, m=m, range=range_)
    return report


def wdecomp_weight(m: int, i: int) -> Fraction:
    sug = sugawara_weight(LieLevel.k_n(m), kn_top_weight(m, i))
    return sug + fock_delta(FockModule(heisenberg_level(m), i)) + singlet_delta(Atypical(i))


def wdecomp_check(m: int, range_: int) -> Report:
    check_m(m)
    report = Report("wdecomp")
    bad = [i for i in range(-range_, range_ + 1) if wdecomp_weight(m, i) != Fraction(3 * abs(i), 2)]
    report.add(f"wdecomp/m={m}", [], bad, m=m, range=range_)
    return report


@dataclass(frozen=True)
class GramBasis:
    """Orthogonal Heisenberg pair J^S, J^1 with norms -1 and -m/2.

    Vectors are coefficient pairs over (J^S, J^1).
    """

    m: int

    def __post_init__(self):
        _check_m_any(self.m)

    @property
    def norms(self) -> Tuple[Fraction, Fraction]:
        return Fraction(-1), Fraction(-self.m, 2)

    def inner(self, x: Tuple[Fraction, Fraction], y: Tuple[Fraction, Fraction]) -> Fraction:
        ns, n1 = self.norms
        return x[0] * y[0] * ns + x[1] * y[1] * n1

    @property
    def h(self) -> Tuple[Fraction, Fraction]:
        return Fraction(1), Fraction(-1)

    @property
    def h_bar(self) -> Tuple[Fraction, Fraction]:
        return Fraction(self.m, self.m + 2), Fraction(2, self.m + 2)

    @property
    def s1(self) -> Fraction:
        return Fraction(-(self.m + 2), 2)

    @property
    def ell(self) -> Fraction:
        return Fraction(-self.m, self.m + 2)


def gram_check(m: int) -> Report:
    g = GramBasis(m)
    report = Report("gram")
    report.add(f"gram/m={m}/<h,h>", g.s1, g.inner(g.h, g.h), m=m)
    report.add(f"gram/m={m}/<hbar,hbar>", g.ell, g.inner(g.h_bar, g.h_bar), m=m)
    report.add(f"gram/m={m}/<h,hbar>", Fraction(0), g.inner(g.h, g.h_bar), m=m)
    return report


def _eigen(v: Tuple[Fraction, Fraction], i, j):
    """Zero-mode eigenvalue of c_S J^S + c_1 J^1 on a state with J^S, J^1 eigenvalues i, j."""
    return i * v[0] + j * v[1]


def fock_basis_change(m: int, i: int, j: int) -> Report:
    """F^{-1}_i (x) F^{-m/2}_j  ->  F^{s1}_{i-j} (x) F^l_{(mi+2j)/(m+2)}: charges and weights."""
    g = GramBasis(m)
    s = Fraction(-m, 2)
    report = Report("fock_basis_change")
    inputs = {"m": m, "i": i, "j": j}
    hw = _eigen(g.h, Fraction(i), Fraction(j))
    hbw = _eigen(g.h_bar, Fraction(i), Fraction(j))
    report.add(f"basis/m={m}/({i},{j})/h", Fraction(i - j), hw, **inputs)
    report.add(f"basis/m={m}/({i},{j})/hbar", Fraction(m * i + 2 * j, m + 2), hbw, **inputs)
    lhs = fock_delta(FockModule(-1, i)) + fock_delta(FockModule(s, j))
    rhs = fock_delta(FockModule(g.s1, hw)) + fock_delta(FockModule(g.ell, hbw))
    report.add(f"basis/m={m}/({i},{j})/weight", lhs, rhs, **inputs)
    return report


def fock_basis_identity(m: int) -> Report:
    """The weight identity as a polynomial identity in (i, j)."""
    g = GramBasis(m)
    i, j = MPoly.gens(("i", "j"))
    s = Fraction(-m, 2)
    lhs = i * i / (-2) + j * j / (2 * s)
    hw = _eigen(g.h, i, j)
    hbw = _eigen(g.h_bar, i, j)
    rhs = hw * hw / (2 * g.s1) + hbw * hbw / (2 * g.ell)
    report = Report("fock_basis_identity")
    report.add(f"basis/m={m}/charge-h", i - j, hw, m=m)
    report.add(f"basis/m={m}/charge-hbar", (i * m + j * 2) / (m + 2), hbw, m=m)
    report.add(f"basis/m={m}/weight-identity", lhs, rhs, m=m)
    return report
