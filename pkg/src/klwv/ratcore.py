"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of that this module
provides half-integer exponents, phases ``x`` standing for ``exp(pi*i*x)``
taken mod 2, and a small sparse multivariate polynomial type used to check
polynomial identities coefficient by coefficient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def rat_canonical(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(p, q)


def as_rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats and decimals are rejected."""
    match = _RAT_RE.match(text)
    if not match:
        raise ValueError(f"malformed rational {text!r}")
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    return rat_canonical(p, q)


def fmt_rat(x: RatLike) -> str:
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_integer(x: RatLike) -> bool:
    return as_rat(x).denominator == 1


def frac_mod(x: RatLike, modulus: RatLike) -> Fraction:
    """Representative of ``x`` in ``[0, modulus)``."""
    x, modulus = as_rat(x), as_rat(modulus)
    return x - modulus * (x // modulus)


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, x: Union[RatLike, "HalfInt"]) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        x = as_rat(x)
        if (2 * x).denominator != 1:
            raise ValueError(f"{fmt_rat(x)} is not a half-integer")
        return cls(int(2 * x))

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other):
        other = HalfInt.of(other)
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other):
        other = HalfInt.of(other)
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other):
        return HalfInt.of(other) - self

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return HalfInt(self.doubled * n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.doubled < other.doubled
        if isinstance(other, (int, Fraction)):
            return self.value < other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return fmt_rat(self.value)

    def __repr__(self):
        return f"HalfInt({self})"


@dataclass(frozen=True)
class Phase:
    """Exponent ``x`` of ``exp(pi*i*x)``, reduced into ``[0, 2)``."""

    residue: Fraction

    def __post_init__(self):
        object.__setattr__(self, "residue", frac_mod(self.residue, 2))

    @classmethod
    def of(cls, x: Union[RatLike, "Phase"]) -> "Phase":
        return x if isinstance(x, Phase) else cls(as_rat(x))

    def __add__(self, other):
        return phase_add(self, Phase.of(other))

    __radd__ = __add__

    def __neg__(self):
        return Phase(-self.residue)

    def __sub__(self, other):
        return self + (-Phase.of(other))

    def is_trivial(self) -> bool:
        return self.residue == 0

    def __str__(self):
        return fmt_rat(self.residue)


def phase_add(x: Phase, y: Phase) -> Phase:
    return Phase(x.residue + y.residue)


Monomial = Tuple[int, ...]


class MPoly:
    """Sparse polynomial with rational coefficients over a fixed variable list.

    Two polynomials can only be combined when their variable tuples are
    identical; this keeps identity checks from silently comparing
    polynomials in different rings.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, RatLike] | None = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("repeated variable name")
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != len(self.variables):
                raise ValueError("exponent tuple length does not match variables")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            c = as_rat(c)
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + c
        self.terms: Dict[Monomial, Fraction] = {k: v for k, v in clean.items() if v}

    @classmethod
    def const(cls, variables: Sequence[str], c: RatLike) -> "MPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> Tuple["MPoly", ...]:
        n = len(variables)
        return tuple(
            cls(variables, {tuple(int(j == i) for j in range(n)): 1}) for i in range(n)
        )

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.const(self.variables, other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return MPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for (m1, c1), (m2, c2) in product(self.terms.items(), other.terms.items()):
            mono = tuple(a + b for a, b in zip(m1, m2))
            out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return MPoly(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rat(c)
        return MPoly(self.variables, {k: v / c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power must be a non-negative int")
        result = MPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (MPoly, int, Fraction)):
            return poly_equal(self, self._coerce(other))
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; compare with poly_equal

    def evaluate(self, point: Mapping[str, RatLike] | Sequence[RatLike]) -> Fraction:
        if isinstance(point, Mapping):
            values = [as_rat(point[v]) for v in self.variables]
        else:
            values = [as_rat(v) for v in point]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term *= v**e
            total += term
        return total

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, mono) if e
            ]
            if not factors:
                parts.append(fmt_rat(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(fmt_rat(c) + "*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self.variables}, {self})"


def poly_equal(p: MPoly, q: MPoly) -> bool:
    if p.variables != q.variables:
        raise ValueError(f"variable lists differ: {p.variables} vs {q.variables}")
    return p.terms == q.terms


def poly_sum(polys: Iterable[MPoly], variables: Sequence[str]) -> MPoly:
    total = MPoly.const(variables, 0)
    for p in polys:
        total = total + p
    return total
