"""Top-level data of minimal reductions at level -(m+3)/2 of sl_{m+2} and the
conformal-weight comparisons with induced modules of the extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .extension import check_m, delta_atypical
from .liecore import (
    LieLevel,
    WeightVec,
    j0_weight,
    minimal_reduction_weight,
    pair,
    pieri_tensor_omega1,
    restrict_glm,
    weyl_dim,
)
from .ratcore import MPoly, RatLike, as_rat, fmt_rat, is_integer
from .report import Report


def reduction_level(m: int) -> LieLevel:
    return LieLevel(m + 2, Fraction(-(m + 3), 2))


@dataclass(frozen=True)
class QhrData:
    m: int
    lam: WeightVec
    mu: Fraction
    lam_bar: WeightVec
    delta: Fraction

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "lambda": str(self.lam),
            "mu": fmt_rat(self.mu),
            "lambda_bar": str(self.lam_bar),
            "delta": fmt_rat(self.delta),
        }


def qhr_top_data(m: int, lam: WeightVec) -> QhrData:
    if lam.N != m + 2:
        raise ValueError(f"weight must be for sl_{m + 2}")
    if not lam.is_dominant_integral():
        raise ValueError(f"weight {lam} is not dominant integral")
    mu, lam_bar = restrict_glm(lam)
    return QhrData(m, lam, mu, lam_bar, minimal_reduction_weight(reduction_level(m), lam))


def two_param_weight(m: int, lam1: RatLike, lam_last: RatLike) -> WeightVec:
    return WeightVec.from_dict(m + 2, {1: lam1, m + 1: lam_last})


def delta_theta(m: int, lam1, lam_last):
    """Top weight of the reduction of L(lam1 w_1 + lam_last w_{m+1}).

    Accepts rationals or polynomials.
    """
    n2 = m + 2
    return (
        lam1 * lam1 * Fraction(1, n2)
        + lam_last * lam_last * Fraction(1, n2)
        + lam1 * lam_last * Fraction(2, (m + 1) * n2)
        + lam1 * Fraction(1, 2)
        + lam_last * Fraction(1, 2)
    )


# --- polynomial identities ------------------------------------------------------

def _poly_weight(m: int, variables: Sequence[str], support: Sequence[int]) -> List:
    """Coefficient list for sum_k x_k w_{support[k]} with MPoly coefficients."""
    gens = MPoly.gens(variables)
    zero = MPoly.const(variables, 0)
    coeffs = [zero] * (m + 1)
    for g, idx in zip(gens, support):
        coeffs[idx - 1] = g
    return coeffs


def _const_weight(m: int, variables: Sequence[str], support: dict) -> List:
    coeffs = [MPoly.const(variables, 0)] * (m + 1)
    for idx, c in support.items():
        coeffs[idx - 1] = MPoly.const(variables, c)
    return coeffs


def sos_difference(m: int) -> MPoly:
    """Reduction weight minus the weight of sector i = -b, over (l1, l2, ll).

    lam = l1 w_1 + l2 w_2 + ll w_{m+1}, built from the inner product directly.
    """
    V = ("l1", "l2", "ll")
    N = m + 2
    lam = _poly_weight(m, V, (1, 2, m + 1))
    two_rho = _const_weight(m, V, {i: 2 for i in range(1, N)})
    half_theta = _const_weight(m, V, {1: Fraction(1, 2), m + 1: Fraction(1, 2)})
    w_diff = _const_weight(m, V, {1: 1, m + 1: -1})
    l2 = MPoly.gens(V)[1]
    lam_lam = pair(N, lam, lam)
    lam_rho = pair(N, lam, two_rho)
    mu = pair(N, lam, w_diff)
    red = (lam_lam + lam_rho) / (m + 1) - pair(N, lam, half_theta)
    top = l2 * l2 / m + l2 - mu * mu * Fraction(m + 2, 2 * m)
    return red - top


def sos_intermediate(m: int) -> MPoly:
    l1, l2, ll = MPoly.gens(("l1", "l2", "ll"))
    F = Fraction
    return (
        l1 * l1 / 2 + l2 * l2 * F(m - 3, 2 * (m + 1)) + ll * ll / 2
        + l1 * l2 * F(m - 1, m + 1) - l1 * ll * F(m - 1, m + 1) - l2 * ll * F(m - 3, m + 1)
        + l1 / 2 + l2 * F(m - 3, 2 * (m + 1)) + ll / 2
    )


def sos_final(m: int) -> MPoly:
    l1, l2, ll = MPoly.gens(("l1", "l2", "ll"))
    F = Fraction
    square = l1 + l2 * F(m - 3, m - 1) - ll * F(m - 1, m + 1)
    return (
        square * square / 2
        + l2 * l2 * F(2 * (m - 3), (m + 1) * (m - 1) ** 2)
        + ll * ll * F(2 * m, (m + 1) ** 2)
        + l1 * l2 * F(4, m * m - 1)
        + l1 / 2 + l2 * F(m - 3, 2 * (m + 1)) + ll / 2
    )


def _sos_value(m: int, l1: int, l2: int, ll: int) -> Fraction:
    F = Fraction
    square = l1 + l2 * F(m - 3, m - 1) - ll * F(m - 1, m + 1)
    return (
        square * square / 2
        + l2 * l2 * F(2 * (m - 3), (m + 1) * (m - 1) ** 2)
        + ll * ll * F(2 * m, (m + 1) ** 2)
        + l1 * l2 * F(4, m * m - 1)
        + F(l1, 2) + l2 * F(m - 3, 2 * (m + 1)) + F(ll, 2)
    )


def sos_certificate(m: int, grid: int = 20) -> Report:
    """Both rewritings of the weight difference as exact identities, then positivity.

    Grid: l1, ll in 0..grid and l2 in 1..grid (l2 = -b >= 1).
    """
    check_m(m)
    if m > 20:
        raise ValueError("sos_certificate covers 4 <= m <= 20")
    report = Report("sos")
    diff = sos_difference(m)
    mid = sos_intermediate(m)
    fin = sos_final(m)
    report.add(f"sos/m={m}/difference=quadratic", mid, diff, m=m)
    report.add(f"sos/m={m}/quadratic=sum-of-squares", mid, fin, m=m)
    non_positive = []
    for l1 in range(grid + 1):
        for l2 in range(1, grid + 1):
            for ll in range(grid + 1):
                if _sos_value(m, l1, l2, ll) <= 0:
                    non_positive.append((l1, l2, ll))
    report.add(f"sos/m={m}/grid-positive", [], non_positive, m=m, grid=grid)
    return report


def delta_theta_identity(m: int) -> Report:
    """Closed form of the reduction weight against Sugawara minus <lam, theta>/2."""
    check_m(m)
    V = ("l1", "ll")
    N = m + 2
    lam = _poly_weight(m, V, (1, m + 1))
    two_rho = _const_weight(m, V, {i: 2 for i in range(1, N)})
    theta = _const_weight(m, V, {1: 1, m + 1: 1})
    lvl = reduction_level(m)
    sug = (pair(N, lam, lam) + pair(N, lam, two_rho)) / (2 * lvl.shifted)
    generic = sug - pair(N, lam, theta) / 2
    l1, ll = MPoly.gens(V)
    report = Report("delta_theta")
    report.add(f"delta_theta/m={m}", delta_theta(m, l1, ll), generic, m=m)
    return report


def difference_identities(m: int, grid: int = 30) -> Report:
    """Delta_theta - Delta(a, b, 0) for b = l1 - ll + 1, on both sign branches."""
    check_m(m)
    V = ("l1", "ll")
    l1, ll = MPoly.gens(V)
    F = Fraction
    b = l1 - ll + 1
    a = (l1 - ll) * F(m, m + 2)
    base = b * b / 2 - a * a * F(m + 2, 2 * m)
    dth = delta_theta(m, l1, ll)
    report = Report("difference")
    # |b| = b on b >= 0 and -b on b < 0
    report.add(f"difference/m={m}/b>=0", l1 * ll * F(2, m + 1) - l1 + ll * 2 - 1, dth - (base + b / 2), m=m)
    report.add(f"difference/m={m}/b<0", l1 * ll * F(2, m + 1) + ll, dth - (base - b / 2), m=m)
    # closed form of Delta(a, b, 0) on the b >= 0 branch
    closed = b * b * F(1, m + 2) + b / 2 + b * F(m, m + 2) - F(m, 2 * (m + 2))
    report.add(f"difference/m={m}/delta_ab0", closed, base + b / 2, m=m)
    # on the b < 0 branch the difference vanishes only at ll = 0, where b = l1 + 1 > 0
    neg_diff = dth - (base - b / 2)
    zeros, consistent = [], []
    for l1v in range(grid + 1):
        for llv in range(grid + 1):
            if neg_diff.evaluate({"l1": l1v, "ll": llv}) == 0:
                zeros.append((l1v, llv))
                if l1v - llv + 1 < 0:
                    consistent.append((l1v, llv))
    report.add(f"difference/m={m}/b<0-zeros-have-ll=0", [], [z for z in zeros if z[1] != 0], m=m, grid=grid)
    report.add(f"difference/m={m}/b<0-contradiction", [], consistent, m=m, grid=grid)
    return report


# --- weight coincidence equation and the Pieri obstruction ------------------------

def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def eq1_solutions(m: int) -> List[Tuple[int, int]]:
    """Non-negative integer (l1, ll) with l1 = -(m+1) - (m^2+m)/(2 ll - m - 1)."""
    check_m(m)
    n = m * m + m
    sols = []
    for d in _divisors(n):
        for den in (d, -d):
            if (den + m + 1) % 2:
                continue
            ll = (den + m + 1) // 2
            l1 = -(m + 1) - n // den
            if ll >= 0 and l1 >= 0:
                sols.append((l1, ll))
    return sorted(set(sols))


def eq1_recheck(m: int) -> Report:
    report = Report("eq1")
    for l1, ll in eq1_solutions(m):
        b = l1 - ll + 1
        a = Fraction((l1 - ll) * m, m + 2)
        report.add(f"eq1/m={m}/({l1},{ll})", delta_theta(m, Fraction(l1), Fraction(ll)),
                   delta_atypical(m, a, b, 0), m=m, lambda1=l1, lambda_last=ll, a=a, b=b)
    return report


def pieri_obstruction(m: int, lam1: int, lam_last: int) -> Report:
    """Which summands of V(lam) (x) V(w_1) could still match a reduction weight."""
    check_m(m)
    lam = two_param_weight(m, lam1, lam_last)
    sols = set(eq1_solutions(m))
    mirrored = {(b, a) for a, b in sols}
    summands = pieri_tensor_omega1(lam)
    N = m + 2
    rows = []
    survivors = []
    for w in summands:
        middle = [i for i in range(2, m + 1) if w[i] != 0]
        pair_ = (int(w[1]), int(w[N - 1]))
        if middle:
            kind = "excluded: lambda_2 = 0 = lambda_m required"
            match = False
        else:
            kind = "two-parameter"
            match = pair_ in sols or pair_ in mirrored
        rows.append({"weight": str(w), "dim": weyl_dim(w), "kind": kind, "eq1_match": match})
        if match:
            survivors.append(str(w))
    report = Report("pieri_obstruction")
    report.add(f"pieri/m={m}/({lam1},{lam_last})/dims", weyl_dim(lam) * N,
               sum(r["dim"] for r in rows), m=m, summands=rows)
    report.add(f"pieri/m={m}/({lam1},{lam_last})/survivors", [], survivors, m=m)
    return report


def match_reduction(m: int, a: RatLike, b: int) -> Tuple[WeightVec, Report]:
    """Dominant weight whose reduction matches A_{a,b} in the family b = (m+2)a/m.

    Returns -b w_1 for b < 0 and b w_{m+1} for b > 0.  The conformal weights
    agree exactly; the J(0) weight of that choice is -a, its diagram conjugate
    has J(0) weight a.
    """
    check_m(m)
    a = as_rat(a)
    if a * Fraction(m + 2, m) != b:
        raise ValueError("match_reduction needs b = (m+2) a / m")
    N = m + 2
    if b < 0:
        lam = (-b) * WeightVec.fundamental(N, 1)
    elif b > 0:
        lam = b * WeightVec.fundamental(N, N - 1)
    else:
        lam = WeightVec.zero(N)
    report = Report("match_reduction")
    delta = minimal_reduction_weight(reduction_level(m), lam)
    report.add(f"match/m={m}/b={b}/delta", delta_atypical(m, a, b, 0), delta, m=m, a=a, b=b)
    report.add(f"match/m={m}/b={b}/closed", Fraction(b * b, m + 2) + Fraction(abs(b), 2), delta, m=m, a=a, b=b)
    report.add(f"match/m={m}/b={b}/mu", -a, j0_weight(lam), m=m, a=a, b=b)
    conj = WeightVec(N, tuple(reversed(lam.coeffs)))
    report.add(f"match/m={m}/b={b}/mu-conjugate", a, j0_weight(conj), m=m, a=a, b=b)
    return lam, report


def integral_mu(m: int, lam: WeightVec) -> bool:
    """J(0) weight of an integral weight lies in Z/(m+2)."""
    return is_integer(j0_weight(lam) * (m + 2))
