"""Truncated formal series in a charge variable z and a weight variable q.

Charges are integers and q-exponents are half-integers.  A series with
``order`` w is exact for every coefficient of weight <= w; terms beyond the
order are never stored.  Internally weights are kept doubled so that all
bookkeeping is integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from .ratcore import HalfInt, RatLike, as_rat, fmt_rat

Key = Tuple[int, int]  # (charge, doubled weight)
WeightLike = Union[HalfInt, RatLike]


def _w2(w: WeightLike) -> int:
    return HalfInt.of(w).doubled


class CharSeries:
    __slots__ = ("order2", "terms")

    def __init__(self, order: WeightLike, terms: Optional[Dict[Key, Fraction]] = None):
        self.order2 = _w2(order)
        self.terms: Dict[Key, Fraction] = {}
        for (c, w2), v in (terms or {}).items():
            if w2 <= self.order2 and v:
                self.terms[(c, w2)] = as_rat(v)

    @classmethod
    def _raw(cls, order2: int, terms: Dict[Key, Fraction]) -> "CharSeries":
        s = cls.__new__(cls)
        s.order2 = order2
        s.terms = {k: v for k, v in terms.items() if v and k[1] <= order2}
        return s

    @classmethod
    def one(cls, order: WeightLike) -> "CharSeries":
        return cls.monomial(1, 0, 0, order)

    @classmethod
    def zero(cls, order: WeightLike) -> "CharSeries":
        return cls(order)

    @classmethod
    def monomial(cls, coeff: RatLike, charge: int, wt: WeightLike, order: WeightLike) -> "CharSeries":
        return cls._raw(_w2(order), {(charge, _w2(wt)): as_rat(coeff)})

    @property
    def order(self) -> HalfInt:
        return HalfInt(self.order2)

    def coeff(self, charge: int, wt: WeightLike) -> Fraction:
        w2 = _w2(wt)
        if w2 > self.order2:
            raise ValueError(f"weight {fmt_rat(Fraction(w2, 2))} beyond truncation order {self.order}")
        return self.terms.get((charge, w2), Fraction(0))

    def valuation2(self) -> int:
        """Doubled lowest stored weight; an empty series is only known to vanish up to its order."""
        if not self.terms:
            return self.order2
        return min(w2 for _, w2 in self.terms)

    def charges(self) -> List[int]:
        return sorted({c for c, _ in self.terms})

    def charge_part(self, charge: int) -> "CharSeries":
        return CharSeries._raw(self.order2, {k: v for k, v in self.terms.items() if k[0] == charge})

    def coefficients(self, charge: int = 0) -> List[Fraction]:
        """Integer-weight coefficient list ``[c_0, c_1, ..., c_order]`` of one charge sector."""
        return [self.terms.get((charge, 2 * n), Fraction(0)) for n in range(self.order2 // 2 + 1)]

    def truncate(self, order: WeightLike) -> "CharSeries":
        o2 = min(self.order2, _w2(order))
        return CharSeries._raw(o2, self.terms)

    def window(self, charge_window: int) -> "CharSeries":
        return CharSeries._raw(
            self.order2, {k: v for k, v in self.terms.items() if abs(k[0]) <= charge_window}
        )

    def shift(self, charge: int, wt: WeightLike) -> "CharSeries":
        """Multiply by z^charge q^wt; the truncation order moves with it."""
        d2 = _w2(wt)
        return CharSeries._raw(
            self.order2 + d2, {(c + charge, w2 + d2): v for (c, w2), v in self.terms.items()}
        )

    def scale(self, c: RatLike) -> "CharSeries":
        c = as_rat(c)
        return CharSeries._raw(self.order2, {k: c * v for k, v in self.terms.items()})

    def __add__(self, other: "CharSeries") -> "CharSeries":
        o2 = min(self.order2, other.order2)
        out = {k: v for k, v in self.terms.items() if k[1] <= o2}
        for k, v in other.terms.items():
            if k[1] <= o2:
                out[k] = out.get(k, Fraction(0)) + v
        return CharSeries._raw(o2, out)

    def __neg__(self) -> "CharSeries":
        return self.scale(-1)

    def __sub__(self, other: "CharSeries") -> "CharSeries":
        return self + (-other)

    def __mul__(self, other: "CharSeries") -> "CharSeries":
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        return self.order2 == other.order2 and self.terms == other.terms

    __hash__ = None

    def items(self) -> Iterator[Tuple[int, HalfInt, Fraction]]:
        for (c, w2) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            yield c, HalfInt(w2), self.terms[(c, w2)]

    def to_json(self) -> List[list]:
        return [[c, str(w), fmt_rat(v)] for c, w, v in self.items()]

    def __str__(self):
        if not self.terms:
            return f"0 + O(q^{self.order}+)"
        parts = [f"{fmt_rat(v)} · z^{c} q^{w}" for c, w, v in self.items()]
        return " + ".join(parts) + f" + O(q^>{self.order})"

    def __repr__(self):
        return f"CharSeries(order={self.order}, {len(self.terms)} terms)"


def series_mul(a: CharSeries, b: CharSeries, charge_window: Optional[int] = None) -> CharSeries:
    """Truncated product, exact up to ``min(a.order, b.order)``.

    A factor with negative q-exponents lets unknown high-order terms of the
    other factor leak below the common order; that case is refused.
    """
    o2 = min(a.order2, b.order2)
    exact2 = min(a.order2 + b.valuation2(), b.order2 + a.valuation2())
    if exact2 < o2:
        raise ValueError(
            "coefficient not determined by the truncated factors "
            f"(exact only up to q^{fmt_rat(Fraction(exact2, 2))}, requested q^{fmt_rat(Fraction(o2, 2))})"
        )
    out: Dict[Key, Fraction] = {}
    b_items = sorted(b.terms.items(), key=lambda kv: kv[0][1])
    for (ca, wa), va in a.terms.items():
        limit = o2 - wa
        for (cb, wb), vb in b_items:
            if wb > limit:
                break
            c = ca + cb
            if charge_window is not None and abs(c) > charge_window:
                continue
            key = (c, wa + wb)
            out[key] = out.get(key, Fraction(0)) + va * vb
    return CharSeries._raw(o2, out)


def partition_series(order: WeightLike) -> CharSeries:
    """prod_{n>=1} (1 - q^n)^{-1}, via the standard dynamic program over part sizes."""
    o2 = _w2(order)
    if o2 < 0:
        raise ValueError("order must be non-negative")
    top = o2 // 2
    counts = [0] * (top + 1)
    counts[0] = 1
    for part in range(1, top + 1):
        for n in range(part, top + 1):
            counts[n] += counts[n - part]
    return CharSeries._raw(o2, {(0, 2 * n): Fraction(c) for n, c in enumerate(counts)})


class Factor(NamedTuple):
    """Descriptor of prod_{n>=1} (1 + sign z^charge q^(offset + step n))^exponent."""

    sign: int
    charge: int
    offset: HalfInt
    step: HalfInt
    exponent: int

    @classmethod
    def make(cls, sign: int, charge: int, offset: WeightLike, step: WeightLike, exponent: int) -> "Factor":
        return cls(sign, charge, HalfInt.of(offset), HalfInt.of(step), exponent)


def _check_factor(f: Factor) -> None:
    if f.sign not in (1, -1) or f.exponent not in (1, -1):
        raise ValueError("sign and exponent must be +1 or -1")
    if f.step.doubled <= 0 or (f.offset + f.step).doubled <= 0:
        raise ValueError(f"non-terminating factor {f}")


def _mul_binomial(terms: Dict[Key, Fraction], o2: int, coeff: int, charge: int, w2: int,
                  inverse: bool, charge_window: Optional[int]) -> Dict[Key, Fraction]:
    """Multiply by (1 + coeff z^charge q^w) or divide by it (w > 0)."""

    def allowed(c: int) -> bool:
        return charge_window is None or abs(c) <= charge_window

    if not inverse:
        out = dict(terms)
        for (c, w), v in terms.items():
            if w + w2 <= o2 and allowed(c + charge):
                key = (c + charge, w + w2)
                out[key] = out.get(key, Fraction(0)) + coeff * v
        return out
    # R = T - coeff * x * R, solved weight by weight since x has positive weight
    buckets: Dict[int, Dict[int, Fraction]] = {}
    for (c, w), v in terms.items():
        buckets.setdefault(w, {})[c] = v
    out: Dict[Key, Fraction] = {}
    w = min(buckets, default=o2 + 1)
    while w <= o2:
        layer = buckets.pop(w, None)
        if layer:
            target = buckets.setdefault(w + w2, {}) if w + w2 <= o2 else None
            for c, v in layer.items():
                if not v:
                    continue
                out[(c, w)] = v
                if target is not None and allowed(c + charge):
                    target[c + charge] = target.get(c + charge, Fraction(0)) - coeff * v
        if not buckets:
            break
        w = min(buckets)
    return out


def product_form(factors: Iterable[Factor], order: WeightLike, charge_window: Optional[int] = None) -> CharSeries:
    o2 = _w2(order)
    terms: Dict[Key, Fraction] = {(0, 0): Fraction(1)}
    for f in factors:
        _check_factor(f)
        n = 1
        while True:
            w2 = f.offset.doubled + n * f.step.doubled
            if w2 > o2:
                break
            if w2 <= 0:
                raise ValueError(f"non-terminating factor {f}")
            terms = _mul_binomial(terms, o2, f.sign, f.charge, w2, f.exponent == -1, charge_window)
            n += 1
    return CharSeries._raw(o2, terms)


def fermion_pair_product(order: WeightLike) -> CharSeries:
    """prod_{n>=1} (1 + z q^n)(1 + z^{-1} q^n)."""
    return product_form([Factor.make(1, 1, 0, 1, 1), Factor.make(1, -1, 0, 1, 1)], order)


def boson_pair_product(order: WeightLike) -> CharSeries:
    """prod_{n>=1} (1 - z q^{n-1/2})^{-1} (1 - z^{-1} q^{n-1/2})^{-1}."""
    half = Fraction(-1, 2)
    return product_form([Factor.make(-1, 1, half, 1, -1), Factor.make(-1, -1, half, 1, -1)], order)
