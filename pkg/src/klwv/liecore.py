"""Weight-lattice arithmetic for sl_N.

Weights are coefficient vectors in the fundamental-weight basis
``omega_1, ..., omega_{N-1}``.  Coefficients are rationals so the same type
carries integral sl-weights and the rational data on the Heisenberg side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from .ratcore import RatLike, as_rat, fmt_rat, parse_rat


@dataclass(frozen=True)
class WeightVec:
    N: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("sl_N needs N >= 2")
        coeffs = tuple(as_rat(c) for c in self.coeffs)
        if len(coeffs) != self.N - 1:
            raise ValueError(f"sl_{self.N} weight needs {self.N - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, N: int) -> "WeightVec":
        return cls(N, (0,) * (N - 1))

    @classmethod
    def fundamental(cls, N: int, i: int) -> "WeightVec":
        if not 1 <= i <= N - 1:
            raise ValueError(f"fundamental weight index {i} out of range for sl_{N}")
        return cls(N, tuple(int(j == i) for j in range(1, N)))

    @classmethod
    def from_dict(cls, N: int, coeffs: dict) -> "WeightVec":
        """Build from ``{index: coefficient}`` with 1-based indices."""
        vec = [0] * (N - 1)
        for i, c in coeffs.items():
            if not 1 <= i <= N - 1:
                raise ValueError(f"index {i} out of range for sl_{N}")
            vec[i - 1] = c
        return cls(N, tuple(vec))

    @classmethod
    def parse(cls, text: str) -> "WeightVec":
        parts = [p for p in text.split(",")]
        return cls(len(parts) + 1, tuple(parse_rat(p) for p in parts))

    def __getitem__(self, i: int) -> Fraction:
        """1-based coefficient lookup, ``lam[1]`` is the omega_1 coefficient."""
        if not 1 <= i <= self.N - 1:
            raise IndexError(i)
        return self.coeffs[i - 1]

    def __add__(self, other: "WeightVec") -> "WeightVec":
        _same_rank(self, other)
        return WeightVec(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        _same_rank(self, other)
        return WeightVec(self.N, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c: RatLike) -> "WeightVec":
        c = as_rat(c)
        return WeightVec(self.N, tuple(c * a for a in self.coeffs))

    def is_dominant_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def size(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def to_partition(self) -> Tuple[int, ...]:
        """Row lengths (length N-1) of the Young diagram of a dominant weight."""
        _require_dominant(self)
        rows = []
        total = 0
        for c in reversed(self.coeffs):
            total += int(c)
            rows.append(total)
        return tuple(reversed(rows))

    @classmethod
    def from_partition(cls, N: int, rows: Sequence[int]) -> "WeightVec":
        """Inverse of :meth:`to_partition`; accepts up to N rows, full columns are dropped."""
        rows = list(rows) + [0] * (N - len(rows))
        if len(rows) != N or any(rows[i] < rows[i + 1] for i in range(N - 1)):
            raise ValueError(f"not a partition with at most {N} rows: {rows}")
        return cls(N, tuple(rows[i] - rows[i + 1] for i in range(N - 1)))

    def __str__(self):
        return ",".join(fmt_rat(c) for c in self.coeffs)

    def pretty(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, 1):
            if c == 0:
                continue
            coef = "" if c == 1 else fmt_rat(c)
            terms.append(f"{coef}w{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return str(self)


@dataclass(frozen=True)
class LieLevel:
    N: int
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", as_rat(self.k))

    @classmethod
    def k_n(cls, m: int) -> "LieLevel":
        """sl_m at level -(m+1)/2."""
        return cls(m, Fraction(-(m + 1), 2))

    @property
    def shifted(self) -> Fraction:
        return self.k + self.N


def _same_rank(a: WeightVec, b: WeightVec) -> None:
    if a.N != b.N:
        raise ValueError(f"rank mismatch: sl_{a.N} vs sl_{b.N}")


def _require_dominant(lam: WeightVec) -> None:
    if not lam.is_dominant_integral():
        raise ValueError(f"weight {lam} is not dominant integral")


def rho(N: int) -> WeightVec:
    return WeightVec(N, (1,) * (N - 1))


def theta(N: int) -> WeightVec:
    """Highest root omega_1 + omega_{N-1}."""
    if N < 3:
        return 2 * WeightVec.fundamental(N, 1)
    return WeightVec.fundamental(N, 1) + WeightVec.fundamental(N, N - 1)


def fw_inner(N: int, i: int, j: int) -> Fraction:
    if not (1 <= i <= N - 1 and 1 <= j <= N - 1):
        raise ValueError(f"indices ({i}, {j}) out of range for sl_{N}")
    return Fraction(min(i, j)) - Fraction(i * j, N)


def pair(N: int, x: Sequence[Any], y: Sequence[Any]) -> Any:
    """Bilinear form on coefficient sequences of any ring (rationals, MPoly, ...)."""
    if len(x) != N - 1 or len(y) != N - 1:
        raise ValueError("coefficient sequences must have length N-1")
    total: Any = Fraction(0)
    for i, xi in enumerate(x, 1):
        if _is_zero(xi):
            continue
        for j, yj in enumerate(y, 1):
            if _is_zero(yj):
                continue
            total = xi * yj * fw_inner(N, i, j) + total
    return total


def _is_zero(v: Any) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    return bool(getattr(v, "is_zero", lambda: False)())


def weight_inner(lam: WeightVec, mu: WeightVec) -> Fraction:
    _same_rank(lam, mu)
    return pair(lam.N, lam.coeffs, mu.coeffs)


def sugawara_weight(lvl: LieLevel, lam: WeightVec) -> Fraction:
    """<lam, lam + 2 rho> / (2 (k + N))."""
    if lvl.N != lam.N:
        raise ValueError(f"rank mismatch: level for sl_{lvl.N}, weight for sl_{lam.N}")
    if lvl.shifted == 0:
        raise ValueError("critical level")
    return weight_inner(lam, lam + 2 * rho(lam.N)) / (2 * lvl.shifted)


def minimal_reduction_weight(lvl: LieLevel, lam: WeightVec) -> Fraction:
    """L(0) eigenvalue on the top of the minimal reduction of L_k(lam)."""
    return sugawara_weight(lvl, lam) - weight_inner(lam, theta(lam.N)) / 2


def j0_weight(lam: WeightVec) -> Fraction:
    """<lam, omega_1 - omega_{N-1}>, the J(0) eigenvalue on the reduced top."""
    N = lam.N
    if N < 3:
        raise ValueError("J(0) weight needs N >= 3")
    diff = WeightVec.fundamental(N, 1) - WeightVec.fundamental(N, N - 1)
    return weight_inner(lam, diff)


def weyl_dim(lam: WeightVec) -> int:
    _require_dominant(lam)
    rows = list(lam.to_partition()) + [0]
    N = lam.N
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= rows[i] - rows[j] + j - i
            den *= j - i
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def pieri_tensor_omega1(lam: WeightVec) -> List[WeightVec]:
    """Highest weights of V(lam) (x) V(omega_1): add one box in every admissible row."""
    _require_dominant(lam)
    N = lam.N
    rows = list(lam.to_partition()) + [0]
    out = []
    for r in range(N):
        if r == 0 or rows[r - 1] > rows[r]:
            new = rows.copy()
            new[r] += 1
            # a full column of height N is the trivial representation
            base = new[N - 1]
            out.append(WeightVec.from_partition(N, [x - base for x in new]))
    return out


def restrict_glm(lam: WeightVec) -> Tuple[Fraction, WeightVec]:
    """gl_m data (J(0) weight, sl_m weight lam_2 w_1 + ... + lam_m w_{m-1}) of an sl_{m+2} weight."""
    N = lam.N
    if N < 5:
        raise ValueError("restriction to gl_m needs N = m + 2 >= 5")
    m = N - 2
    return j0_weight(lam), WeightVec(m, lam.coeffs[1:m])


def kn_top_weight(m: int, i: int) -> WeightVec:
    """Top weight of U_i: i w_1 for i >= 0 and |i| w_{m-1} for i < 0."""
    if i >= 0:
        return i * WeightVec.fundamental(m, 1)
    return (-i) * WeightVec.fundamental(m, m - 1)
