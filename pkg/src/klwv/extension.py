"""Induced modules of the simple-current extension
``W = sum_i U_i (x) F^l_i (x) M_i`` with ``l = -m/(m+2)``.

A module label ``GenInduced(m, j0, a, spart)`` stands for
``Ind(U_j0 (x) F^l_a (x) X)`` whose sector ``i`` is
``U_{j0+i} (x) F^l_{a+i} (x) X_{+i}``; ``X`` is ``M_b`` (``Atyp(b)``) or
``V_nu`` (``Typ(nu)``).  Shifting all three indices by the same integer gives
an isomorphic induced module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from .freefield import Atypical, FockModule, fock_braid, fock_delta, singlet_braid, singlet_delta, singlet_v
from .liecore import LieLevel, kn_top_weight, sugawara_weight, weyl_dim
from .ratcore import Phase, RatLike, as_rat, fmt_rat, frac_mod, is_integer
from .report import Report


def check_m(m: int) -> None:
    if not isinstance(m, int) or m < 4 or m % 2:
        raise ValueError(f"m must be an even integer >= 4, got {m}")


def heisenberg_level(m: int) -> Fraction:
    return Fraction(-m, m + 2)


def u_delta(m: int, p: int) -> Fraction:
    """Top weight p^2/m + |p| of U_p."""
    return Fraction(p * p, m) + abs(p)


def u_braid(m: int, i: int, j: int) -> Phase:
    return Phase(Fraction(2 * i * j, m))


@dataclass(frozen=True)
class Atyp:
    b: int

    def shifted(self, t: int) -> "Atyp":
        return Atyp(self.b + t)


@dataclass(frozen=True)
class Typ:
    """Typical singlet part V_nu; integer nu is the reducible V_i."""

    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "nu", as_rat(self.nu))

    @property
    def reducible(self) -> bool:
        return is_integer(self.nu)

    def shifted(self, t: int) -> "Typ":
        return Typ(self.nu + t)


SPart = Union[Atyp, Typ]


@dataclass(frozen=True)
class GenInduced:
    m: int
    j0: int
    a: Fraction
    spart: SPart

    def __post_init__(self):
        check_m(self.m)
        object.__setattr__(self, "a", as_rat(self.a))

    @classmethod
    def atypical(cls, m: int, a: RatLike, b: int, j0: int = 0) -> "GenInduced":
        return cls(m, j0, as_rat(a), Atyp(b))

    @classmethod
    def typical(cls, m: int, mu: RatLike, nu: RatLike, j0: int = 0) -> "GenInduced":
        return cls(m, j0, as_rat(mu), Typ(as_rat(nu)))

    @property
    def is_atypical(self) -> bool:
        return isinstance(self.spart, Atyp)

    def shifted(self, t: int) -> "GenInduced":
        return GenInduced(self.m, self.j0 + t, self.a + t, self.spart.shifted(t))

    def canonical(self) -> "GenInduced":
        return self.shifted(-self.j0)

    def sector(self, i: int) -> Tuple[int, FockModule, object]:
        """(U index, Fock module, singlet module) of sector i."""
        fock = FockModule(heisenberg_level(self.m), self.a + i)
        if isinstance(self.spart, Atyp):
            singlet = Atypical(self.spart.b + i)
        else:
            singlet = singlet_v(self.spart.nu + i)
        return self.j0 + i, fock, singlet

    def sector_delta(self, i: int) -> Fraction:
        p, fock, singlet = self.sector(i)
        return u_delta(self.m, p) + fock_delta(fock) + singlet_delta(singlet)

    def describe(self) -> Dict[str, object]:
        out: Dict[str, object] = {"m": self.m, "j0": self.j0, "a": fmt_rat(self.a)}
        if isinstance(self.spart, Atyp):
            out["b"] = self.spart.b
        else:
            out["nu"] = fmt_rat(self.spart.nu)
        return out

    def to_json(self):
        return self.describe()

    def __str__(self):
        d = self.describe()
        last = f"M_{d['b']}" if "b" in d else f"V_{d['nu']}"
        return f"Ind(U_{self.j0} x F_{d['a']} x {last}) [m={self.m}]"


# --- conformal weights ------------------------------------------------------

def delta_atypical(m: int, a: RatLike, b: int, i: int) -> Fraction:
    """i^2/m + |i| - (a+i)^2 (m+2)/(2m) + (b+i)^2/2 + |b+i|/2."""
    check_m(m)
    a = as_rat(a)
    return (
        Fraction(i * i, m) + abs(i) - (a + i) ** 2 * Fraction(m + 2, 2 * m)
        + Fraction((b + i) ** 2, 2) + Fraction(abs(b + i), 2)
    )


def delta_typical(m: int, mu: RatLike, nu: RatLike, i: int) -> Fraction:
    """-mu^2 (m+2)/(2m) + nu(nu+1)/2 + |i| + i (nu - (m+2) mu / m + 1/2)."""
    check_m(m)
    mu, nu = as_rat(mu), as_rat(nu)
    r = Fraction(m + 2, m)
    return -mu * mu * r / 2 + nu * (nu + 1) / 2 + abs(i) + i * (nu - r * mu + Fraction(1, 2))


def drift(M: GenInduced) -> Fraction:
    """b - (m+2)a/m, resp. nu - (m+2)mu/m, of the canonical (j0 = 0) form."""
    c = M.canonical()
    r = Fraction(c.m + 2, c.m)
    target = c.spart.b if isinstance(c.spart, Atyp) else c.spart.nu
    return target - r * c.a


def is_local(M: GenInduced) -> bool:
    c = M.canonical()
    if isinstance(c.spart, Atyp):
        return is_integer(c.a * Fraction(c.m + 2, c.m))
    return is_integer(drift(c))


def monodromy_exponent(M: GenInduced) -> Fraction:
    """Double-braiding exponent (mod 1, units of 2 pi i) of J_1 with the base sector."""
    if not isinstance(M.spart, Atyp):
        raise ValueError("phase defined for integer singlet part only")
    return frac_mod(Fraction(2 * M.j0, M.m) - M.a * Fraction(M.m + 2, M.m), 1)


def monodromy_from_braidings(M: GenInduced) -> Fraction:
    """Same exponent assembled from the three factor braidings (sum of squares of c)."""
    if not isinstance(M.spart, Atyp):
        raise ValueError("phase defined for integer singlet part only")
    ell = heisenberg_level(M.m)
    j1 = FockModule(ell, 1)
    base = FockModule(ell, M.a)
    total = u_braid(M.m, 1, M.j0) + fock_braid(j1, base) + singlet_braid(1, M.spart.b)
    # c = exp(pi i S) so the double braiding is exp(2 pi i S)
    return frac_mod(total.residue, 1)


# --- lower-boundedness --------------------------------------------------------

@dataclass(frozen=True)
class SectorProfile:
    """Exact minimisation of the sector weights i -> Delta_i.

    The i^2 terms cancel, so Delta_i is convex piecewise linear in i with
    kinks only at i = -j0 and (atypical) i = -b.  ``argmin`` is None when
    the minimum is attained on an infinite tail.
    """

    bounded: bool
    argmin: Optional[Tuple[int, ...]]
    delta_min: Optional[Fraction]
    slope_minus: Fraction
    slope_plus: Fraction


def sector_profile(M: GenInduced) -> SectorProfile:
    kinks = [-M.j0]
    if isinstance(M.spart, Atyp):
        kinks.append(-M.spart.b)
    lo, hi = min(kinks) - 1, max(kinks) + 1
    f = M.sector_delta
    slope_plus = f(hi + 1) - f(hi)
    slope_minus = f(lo) - f(lo - 1)
    if slope_plus < 0 or slope_minus > 0:
        return SectorProfile(False, None, None, slope_minus, slope_plus)
    values = {i: f(i) for i in range(lo, hi + 1)}
    best = min(values.values())
    argmin = tuple(i for i, v in sorted(values.items()) if v == best)
    if (slope_plus == 0 and values[hi] == best) or (slope_minus == 0 and values[lo] == best):
        argmin = None
    return SectorProfile(True, argmin, best, slope_minus, slope_plus)


def lower_bound_cases(M: GenInduced) -> Tuple[bool, FrozenSet[int]]:
    """Closed-form case list for a local module in canonical form."""
    c = M.canonical()
    d = drift(c)
    if isinstance(c.spart, Atyp):
        b = c.spart.b
        if abs(d) > Fraction(3, 2):
            return False, frozenset()
        if d == 0:
            return True, frozenset({0})
        if d == 1:
            return True, frozenset({-b} if b >= 0 else {0})
        if d == -1:
            return True, frozenset({-b} if b < 0 else {0})
        raise ValueError("drift of a local atypical module must be an integer")
    if d in (0, -1):
        return True, frozenset({0})
    return False, frozenset()


def lower_bounded(M: GenInduced) -> Tuple[bool, FrozenSet[int]]:
    """(lower bounded?, argmin sectors) in the module's own sector indexing.

    Computed by exact minimisation; the closed-form case list must agree.
    """
    if not is_local(M):
        raise ValueError(f"{M} is not local")
    prof = sector_profile(M)
    ok, cases = lower_bound_cases(M)
    argmin = frozenset(prof.argmin or ())
    # canonical sector i is sector i - j0 of M
    cases = frozenset(i - M.j0 for i in cases)
    if ok != prof.bounded or (ok and cases != argmin):
        raise AssertionError(f"closed form {ok, sorted(cases)} disagrees with exact minimum {prof}")
    return ok, argmin


# --- classification -------------------------------------------------------------

class ClassLabel(str, enum.Enum):
    S0 = "S0"
    S1 = "S1"
    Sminus1 = "Sminus1"
    A1 = "A1"
    Aminus1 = "Aminus1"
    Typ = "Typ"
    Reducible = "Reducible"
    NotLocal = "NotLocal"
    NotLowerBounded = "NotLowerBounded"


ORDINARY = frozenset({ClassLabel.S0, ClassLabel.S1, ClassLabel.Sminus1, ClassLabel.A1,
                      ClassLabel.Aminus1, ClassLabel.Typ, ClassLabel.Reducible})


@dataclass(frozen=True)
class Classification:
    module: GenInduced
    label: ClassLabel
    local: bool
    lower_bounded: bool
    argmin: Optional[Tuple[int, ...]]
    delta_min: Optional[Fraction]
    monodromy: Optional[Fraction]
    top_dim: Optional[int]
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "module": self.module.describe(),
            "class": self.label.value,
            "local": self.local,
            "lower_bounded": self.lower_bounded,
            "argmin": "infinite" if self.argmin is None and self.lower_bounded else list(self.argmin or ()),
            "delta_min": None if self.delta_min is None else fmt_rat(self.delta_min),
            "monodromy": None if self.monodromy is None else fmt_rat(self.monodromy),
            "top_dim": self.top_dim,
            "notes": list(self.notes),
        }


def _top_dim(M: GenInduced, argmin: Optional[Tuple[int, ...]]) -> Optional[int]:
    if argmin is None:
        return None
    return sum(weyl_dim(kn_top_weight(M.m, M.j0 + i)) for i in argmin)


def _verbatim_family(M: GenInduced) -> Optional[ClassLabel]:
    """A^{(+-1)}_{a,b} = Ind(U_{-b} x F_a x M_b) written with base U_{-b}."""
    if not isinstance(M.spart, Atyp) or M.j0 == 0 or M.j0 != -M.spart.b:
        return None
    r = M.a * Fraction(M.m + 2, M.m)
    if not is_integer(r):
        return None
    b = M.spart.b
    if b == r + 1 and b < 0:
        return ClassLabel.A1
    if b == r - 1 and b > 0:
        return ClassLabel.Aminus1
    return None


def classify(M: GenInduced) -> Classification:
    notes: List[str] = []
    mono = monodromy_exponent(M) if M.is_atypical else None
    prof = sector_profile(M)
    local = is_local(M)
    top = _top_dim(M, prof.argmin) if prof.bounded else None

    family = _verbatim_family(M)
    if family is not None:
        if not local:
            notes.append(
                "listed with base U_{-b}; the grading criterion after shifting to j0=0 "
                "does not hold for these parameters"
            )
        if mono:
            notes.append(f"monodromy exponent {fmt_rat(mono)} is non-zero")
        return Classification(M, family, local, prof.bounded, prof.argmin, prof.delta_min, mono, top, tuple(notes))

    if not local:
        return Classification(M, ClassLabel.NotLocal, False, prof.bounded, prof.argmin,
                              prof.delta_min, mono, top, ())
    bounded, _ = lower_bounded(M)
    if not bounded:
        return Classification(M, ClassLabel.NotLowerBounded, True, False, None, None, mono, None, ())

    c = M.canonical()
    d = drift(c)
    if isinstance(c.spart, Atyp):
        b = c.spart.b
        if d == 0:
            label = ClassLabel.S0
        elif d == 1:
            label = ClassLabel.S1 if b >= 0 else ClassLabel.A1
            if b == 0:
                notes.append("b = 0 edge case: top attained at i = 0 = i + b")
        else:
            label = ClassLabel.Sminus1 if b <= 0 else ClassLabel.Aminus1
            if b == 0:
                notes.append("b = 0 edge case: top attained at i = 0 = i + b")
    else:
        if c.spart.reducible:
            label = ClassLabel.Reducible
            notes.append("indecomposable, reducible")
        else:
            label = ClassLabel.Typ
    return Classification(M, label, True, True, prof.argmin, prof.delta_min, mono, top, tuple(notes))


def l_module(m: int, i: int) -> GenInduced:
    """The module L[i] at the listed parameters (base U_i)."""
    check_m(m)
    if i == 0:
        raise ValueError("L[i] is defined for i != 0")
    r = Fraction(m, m + 2)
    if i > 0:
        return GenInduced.atypical(m, -(i + 1) * r, -i, j0=i)
    return GenInduced.atypical(m, -(i - 1) * r, -i, j0=i)


def rational_grid(denom_bound: int, bound: int) -> List[Fraction]:
    """All p/q in lowest terms with 1 <= q <= denom_bound and |p/q| <= bound."""
    seen = set()
    for q in range(1, denom_bound + 1):
        for p in range(-bound * q, bound * q + 1):
            seen.add(Fraction(p, q))
    return sorted(seen)


def enumerate_ordinary(m: int, denom_bound: int, range_bound: int) -> List[Classification]:
    """Ordinary modules on the parameter grid, one representative per shift class.

    Canonical (j0 = 0) labels cover |a|, |b|, |mu|, |nu| <= range_bound with
    denominators <= denom_bound; the A^{(+-1)} families are added with the
    base U_{-b} they are listed with.
    """
    check_m(m)
    if denom_bound < 1 or range_bound < 1:
        raise ValueError("bounds must be positive")
    r = Fraction(m + 2, m)
    grid = rational_grid(denom_bound, range_bound)
    in_grid = set(grid)
    out: List[Classification] = []
    for a in grid:
        if not is_integer(a * r):
            continue
        for b in range(-range_bound, range_bound + 1):
            cl = classify(GenInduced.atypical(m, a, b))
            if cl.label in ORDINARY:
                out.append(cl)
    for mu in grid:
        for shift in (0, -1):
            nu = r * mu + shift
            if nu in in_grid:
                cl = classify(GenInduced.typical(m, mu, nu))
                if cl.label in ORDINARY:
                    out.append(cl)
    for a in grid:
        ra = a * r
        if not is_integer(ra):
            continue
        for b in (int(ra) + 1, int(ra) - 1):
            if b != 0 and abs(b) <= range_bound:
                M = GenInduced.atypical(m, a, b, j0=-b)
                if _verbatim_family(M) is not None:
                    out.append(classify(M))
    return out


# --- braiding and grading checks ---------------------------------------------

def evenness_check(m: int, range_: int) -> Report:
    """All J_i, J_j braidings trivial: 2ij/m + ij/l + ij = 0 mod 2."""
    check_m(m)
    if range_ < 1:
        raise ValueError("range must be >= 1")
    ell = heisenberg_level(m)
    violations = []
    for i in range(-range_, range_ + 1):
        for j in range(-range_, range_ + 1):
            total = u_braid(m, i, j) + fock_braid(FockModule(ell, i), FockModule(ell, j)) + singlet_braid(i, j)
            if not total.is_trivial():
                violations.append({"i": i, "j": j, "phase": total.residue})
    report = Report("evenness")
    report.add(f"evenness/m={m}", [], violations, m=m, range=range_)
    return report


def grading_check(M: GenInduced, range_: int) -> Report:
    """Delta_i - Delta_0 = i/2 mod Z over |i| <= range_."""
    if not is_local(M):
        raise ValueError(f"{M} is not local")
    base = M.sector_delta(0)
    bad = []
    for i in range(-range_, range_ + 1):
        diff = M.sector_delta(i) - base
        want = Fraction(i % 2, 2)
        if frac_mod(diff, 1) != want:
            bad.append({"i": i, "shift": diff})
    report = Report("grading")
    report.add(f"grading/{M}", [], bad, **M.describe(), range=range_)
    return report


def sector_weight_from_sugawara(m: int, p: int) -> Fraction:
    """U_p top weight from the Sugawara formula of sl_m at level -(m+1)/2."""
    return sugawara_weight(LieLevel.k_n(m), kn_top_weight(m, p))
