"""Heisenberg Fock modules and modules of the c = -2 singlet algebra.

Fock modules ``F^l_a`` carry a level ``l`` (norm of the rescaled Heisenberg
field) and a weight ``a``.  Singlet modules are the atypical simple modules
``M_i`` (i integer), the typical simple modules ``V_nu`` (nu not an integer),
and the reducible ``V_i`` sitting in ``0 -> M_i -> V_i -> M_{i+1} -> 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .qseries import CharSeries, boson_pair_product, fermion_pair_product, partition_series, series_mul
from .ratcore import HalfInt, Phase, RatLike, as_rat, fmt_rat, is_integer, parse_rat
from .report import Report


@dataclass(frozen=True)
class FockModule:
    level: Fraction
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "level", as_rat(self.level))
        object.__setattr__(self, "weight", as_rat(self.weight))
        if self.level == 0:
            raise ValueError("Fock level must be non-zero")

    def __str__(self):
        return f"F:l={fmt_rat(self.level)},a={fmt_rat(self.weight)}"


@dataclass(frozen=True)
class Atypical:
    i: int

    def __str__(self):
        return f"M:{self.i}"


@dataclass(frozen=True)
class Typical:
    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "nu", as_rat(self.nu))
        if is_integer(self.nu):
            raise ValueError(f"typical module needs a non-integer parameter, got {fmt_rat(self.nu)}")

    def __str__(self):
        return f"V:{fmt_rat(self.nu)}"


@dataclass(frozen=True)
class FockV:
    """V_i for integer i: indecomposable with composition factors M_i, M_{i+1}."""

    nu: int

    reducible = True

    @property
    def factors(self) -> Tuple[Atypical, Atypical]:
        return Atypical(self.nu), Atypical(self.nu + 1)

    def __str__(self):
        return f"V:{self.nu}"


SingletModule = Union[Atypical, Typical, FockV]


def singlet_v(nu: RatLike) -> SingletModule:
    """V_nu, routed to the reducible variant when nu is an integer."""
    nu = as_rat(nu)
    return FockV(int(nu)) if is_integer(nu) else Typical(nu)


_LABEL_F = re.compile(r"^F:(?:l|ℓ)=([^,]+),a=(.+)$")


def parse_module_label(text: str) -> Union[SingletModule, FockModule]:
    """Parse ``M:i``, ``V:p/q`` or ``F:l=p/q,a=p/q``."""
    text = text.strip()
    if text.startswith("M:"):
        value = parse_rat(text[2:])
        if not is_integer(value):
            raise ValueError(f"atypical index must be an integer: {text!r}")
        return Atypical(int(value))
    if text.startswith("V:"):
        return singlet_v(parse_rat(text[2:]))
    match = _LABEL_F.match(text)
    if match:
        return FockModule(parse_rat(match.group(1)), parse_rat(match.group(2)))
    raise ValueError(f"unrecognised module label {text!r}")


# --- Fock modules ---------------------------------------------------------

def fock_delta(F: FockModule) -> Fraction:
    return F.weight**2 / (2 * F.level)


def fock_fuse(F: FockModule, G: FockModule) -> FockModule:
    if F.level != G.level:
        raise ValueError("level mismatch")
    return FockModule(F.level, F.weight + G.weight)


def fock_braid(F: FockModule, G: FockModule) -> Phase:
    if F.level != G.level:
        raise ValueError("level mismatch")
    return Phase(F.weight * G.weight / F.level)


# --- singlet modules ------------------------------------------------------

def triangular(x: RatLike) -> Fraction:
    x = as_rat(x)
    return x * (x + 1) / 2


def singlet_delta(mod: SingletModule) -> Fraction:
    if isinstance(mod, Atypical):
        return triangular(abs(mod.i))
    return triangular(mod.nu)


def singlet_fuse(x: SingletModule, y: SingletModule) -> SingletModule:
    if isinstance(y, Atypical) and not isinstance(x, Atypical):
        x, y = y, x
    if not isinstance(x, Atypical):
        raise ValueError("fusion not in scope: one factor must be an atypical simple current")
    if isinstance(y, Atypical):
        return Atypical(x.i + y.i)
    return singlet_v(x.i + y.nu)


def singlet_braid(i: int, j: int) -> Phase:
    """(-1)^{ij} as the exponent ij mod 2."""
    return Phase(Fraction(i * j))


def atypical_numerator(i: int, order: RatLike) -> CharSeries:
    """sum_{j>=0} (-1)^j q^{(i+j)(i+j+1)/2}, so that ch M_i = numerator / prod(1-q^n).

    Telescoped from ch V_i = ch M_i + ch M_{i+1}.
    """
    o = HalfInt.of(order)
    terms: Dict[Tuple[int, int], Fraction] = {}
    j = 0
    while True:
        t = triangular(i + j)
        if t > o.value and i + j >= 0:
            break
        if t <= o.value:
            key = (0, int(2 * t))
            terms[key] = terms.get(key, Fraction(0)) + (-1) ** j
        j += 1
    return CharSeries._raw(o.doubled, terms)


def singlet_char(mod: SingletModule, order: RatLike) -> CharSeries:
    """Truncated q-character (charge 0), without the q^{-c/24} prefactor."""
    if isinstance(mod, Atypical):
        return series_mul(atypical_numerator(mod.i, order), partition_series(order))
    if isinstance(mod, FockV):
        return partition_series(order).shift(0, triangular(mod.nu)).truncate(order)
    raise ValueError(
        f"top weight {fmt_rat(singlet_delta(mod))} of {mod} is not a half-integer; "
        "use singlet_char_with_offset"
    )


def singlet_char_with_offset(mod: SingletModule, order: RatLike) -> Tuple[Fraction, CharSeries]:
    """(top weight D, q^{-D} ch) for any singlet module; the series starts at q^0."""
    delta = singlet_delta(mod)
    if isinstance(mod, Atypical):
        return delta, singlet_char(mod, as_rat(order) + delta).shift(0, -delta)
    return delta, partition_series(order)


def free_generator_count(order: int) -> List[int]:
    """Monomials in modes L_{-n} (n >= 2) and W_{-n} (n >= 3), graded by weight.

    Counts states of the vacuum module as if it were freely generated by a
    weight 2 and a weight 3 field.
    """
    counts = [0] * (order + 1)
    counts[0] = 1
    for start in (2, 3):
        for part in range(start, order + 1):
            for n in range(part, order + 1):
                counts[n] += counts[n - part]
    return counts


# --- character identities -------------------------------------------------

def _compare(report: Report, lhs: CharSeries, rhs: CharSeries, label: str, **inputs) -> None:
    charges = sorted(set(lhs.charges()) | set(rhs.charges()))
    mismatches = []
    for c in charges:
        left = lhs.charge_part(c)
        right = rhs.charge_part(c)
        if left.terms != right.terms:
            for key in sorted(set(left.terms) | set(right.terms)):
                a = left.terms.get(key, Fraction(0))
                b = right.terms.get(key, Fraction(0))
                if a != b:
                    mismatches.append({"charge": key[0], "weight": str(HalfInt(key[1])), "product": a, "sum": b})
        report.add(f"{label}/charge={c}", [str(x) for x in _flat(left)], [str(x) for x in _flat(right)], charge=c, **inputs)
    report.add(f"{label}/mismatches", [], mismatches, **inputs)


def _flat(s: CharSeries) -> List[str]:
    return [f"{fmt_rat(v)}@{w}" for _, w, v in s.items()]


def verify_sympfermion(order: RatLike = 20, charge_window: int = 7) -> Report:
    """prod (1 + z q^n)(1 + z^-1 q^n) == sum_i z^i ch M_i up to q^order."""
    o = HalfInt.of(order)
    if triangular(charge_window + 1) <= o.value:
        raise ValueError(
            f"insufficient charge_window {charge_window}: sector {charge_window + 1} starts at "
            f"q^{fmt_rat(triangular(charge_window + 1))} <= q^{o}"
        )
    lhs = fermion_pair_product(o)
    rhs = CharSeries.zero(o)
    for i in range(-charge_window, charge_window + 1):
        rhs = rhs + singlet_char(Atypical(i), o).shift(i, 0)
    report = Report("sympfermion")
    _compare(report, lhs, rhs, "sympfermion", order=o.value, charge_window=charge_window)
    return report


def bg_sector(i: int, order: RatLike) -> CharSeries:
    """z^i q^{-i^2/2} ch M_i / prod(1 - q^n) truncated at ``order``.

    Lowest weight is |i|/2.  The numerator is shifted before multiplying so
    that every factor has non-negative q-exponents.
    """
    o = HalfInt.of(order)
    shift = Fraction(i * i, 2)
    num = atypical_numerator(i, o.value + shift).shift(i, -shift)
    p = partition_series(o)
    return series_mul(series_mul(num, p), p)


def verify_bg_decomposition(order: RatLike = 20, charge_window: int | None = None) -> Report:
    """prod (1 - z q^{n-1/2})^{-1} (1 - z^{-1} q^{n-1/2})^{-1} == sum_i bg_sector(i)."""
    o = HalfInt.of(order)
    if charge_window is None:
        charge_window = o.doubled
    if Fraction(charge_window + 1, 2) <= o.value:
        raise ValueError(
            f"insufficient charge_window {charge_window}: sector {charge_window + 1} starts at "
            f"q^{fmt_rat(Fraction(charge_window + 1, 2))} <= q^{o}"
        )
    lhs = boson_pair_product(o)
    rhs = CharSeries.zero(o)
    for i in range(-charge_window, charge_window + 1):
        rhs = rhs + bg_sector(i, o)
    report = Report("bg_decomposition")
    _compare(report, lhs, rhs, "bg", order=o.value, charge_window=charge_window)
    return report
