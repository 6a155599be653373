# cyclodecomp/periodic.py
"""
Exact periodic sequences on the integer grid Z/nZ and the shift operator.

A PeriodicSeq stores one period of values; y(x) = values[x mod n] for any
integer x. A ShiftPoly sum c_i E^i acts by (E^h y)(x) = y(x + h).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .cyclotomic import divisors
from .exactmath import RatPoly, RationalLike, to_rational


@dataclass(frozen=True)
class PeriodicSeq:
    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Declared period must be positive, got {self.n}")
        values = tuple(to_rational(v) for v in self.values)
        if len(values) != self.n:
            raise ValueError(f"Period {self.n} needs {self.n} values, got {len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: RationalLike) -> "PeriodicSeq":
        return cls(len(values), tuple(values))

    @classmethod
    def from_values(cls, values: Sequence[RationalLike]) -> "PeriodicSeq":
        return cls(len(values), tuple(values))

    @classmethod
    def zeros(cls, n: int) -> "PeriodicSeq":
        return cls(n, (0,) * n)

    def __call__(self, x: int) -> Fraction:
        return self.values[x % self.n]

    def __len__(self) -> int:
        return self.n

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def _check_same_period(self, other: "PeriodicSeq") -> None:
        if other.n != self.n:
            raise ValueError(f"Period mismatch: {self.n} vs {other.n}; redeclare on a common period")

    def __add__(self, other: "PeriodicSeq") -> "PeriodicSeq":
        self._check_same_period(other)
        return PeriodicSeq(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "PeriodicSeq") -> "PeriodicSeq":
        self._check_same_period(other)
        return PeriodicSeq(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "PeriodicSeq":
        return PeriodicSeq(self.n, tuple(-a for a in self.values))

    def scale(self, c: RationalLike) -> "PeriodicSeq":
        c = to_rational(c)
        return PeriodicSeq(self.n, tuple(c * a for a in self.values))

    def to_text(self) -> List[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class ShiftPoly:
    """Polynomial sum c_i E^i in the shift operator."""

    poly: RatPoly

    @classmethod
    def of(cls, *coeffs: RationalLike) -> "ShiftPoly":
        return cls(RatPoly(tuple(coeffs)))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __call__(self, seq: PeriodicSeq) -> PeriodicSeq:
        return apply(self, seq)

    def __add__(self, other: "ShiftPoly") -> "ShiftPoly":
        return ShiftPoly(self.poly + other.poly)

    def __mul__(self, other: "ShiftPoly") -> "ShiftPoly":
        # shifts commute, so operator composition is polynomial multiplication
        return ShiftPoly(self.poly * other.poly)


@dataclass(frozen=True)
class FrequencyBin:
    k: int
    order: int


def frequency_bins(n: int) -> List[FrequencyBin]:
    """Bin k <-> omega_k = exp(2 pi i k / n), of multiplicative order n / gcd(n, k)."""
    if n < 1:
        raise ValueError(f"Expected a positive integer, got {n}")
    return [FrequencyBin(k=k, order=n // math.gcd(n, k)) for k in range(n)]


# ---------- Shift calculus ---------- #


def shift(seq: PeriodicSeq, h: int) -> PeriodicSeq:
    n = seq.n
    h %= n
    return PeriodicSeq(n, seq.values[h:] + seq.values[:h])


def apply(op, seq: PeriodicSeq) -> PeriodicSeq:
    """
    (P(E) y)(k) = sum_i c_i y(k + i). Accepts a ShiftPoly or a bare RatPoly.

    Runs on integers: both sides are scaled to a common denominator, the
    cyclic correlation is taken in Python ints and divided back once.
    """
    poly = op.poly if isinstance(op, ShiftPoly) else op
    n = seq.n
    if poly.is_zero:
        return PeriodicSeq.zeros(n)

    # fold exponents mod n first: E^n = I on the grid
    folded = [Fraction(0)] * n
    for i, c in enumerate(poly.coeffs):
        folded[i % n] += c

    c_den = math.lcm(*(c.denominator for c in folded))
    v_den = math.lcm(*(v.denominator for v in seq.values))
    c_int = [(c.numerator * (c_den // c.denominator)) for c in folded]
    v_int = [(v.numerator * (v_den // v.denominator)) for v in seq.values]
    terms = [(i, c) for i, c in enumerate(c_int) if c]

    scale = c_den * v_den
    out = []
    for k in range(n):
        acc = 0
        for i, c in terms:
            acc += c * v_int[(k + i) % n]
        out.append(Fraction(acc, scale))
    return PeriodicSeq(n, tuple(out))


def redeclare(seq: PeriodicSeq, m: int) -> PeriodicSeq:
    """The same grid function declared with period m (a multiple of seq.n)."""
    if m < 1 or m % seq.n:
        raise ValueError(f"Cannot redeclare period {seq.n} as {m}: {seq.n} must divide {m}")
    return PeriodicSeq(m, seq.values * (m // seq.n))


def fundamental_period(seq: PeriodicSeq) -> int:
    # any period p gives the period gcd(p, n), so the least one divides n
    for p in divisors(seq.n):
        if shift(seq, p) == seq:
            return p
    return seq.n


def is_antiperiodic(seq: PeriodicSeq, q: int) -> bool:
    if q < 1 or seq.n % (2 * q):
        raise ValueError(f"Antiperiod {q} needs 2*{q} to divide the declared period {seq.n}")
    return shift(seq, q) == -seq


def halving_split(seq: PeriodicSeq) -> Tuple[PeriodicSeq, PeriodicSeq]:
    """
    f = g + h with g = (f + E^{n/2} f)/2 periodic of period n/2 and
    h = (f - E^{n/2} f)/2 antiperiodic of antiperiod n/2.
    """
    if seq.n % 2:
        raise ValueError(f"Halving split needs an even period, got {seq.n}")
    half = Fraction(1, 2)
    moved = shift(seq, seq.n // 2)
    g = (seq + moved).scale(half)
    h = (seq - moved).scale(half)
    return g, h


def halving_chain(seq: PeriodicSeq) -> Tuple[Dict[int, PeriodicSeq], PeriodicSeq]:
    """
    Repeat the halving split on the periodic part while its period is even:
        P_n = AP_{n/2} + AP_{n/4} + ... + P_m,  m the odd part of n.
    Returns ({antiperiod q: part}, remainder); everything declared on period n.
    """
    parts: Dict[int, PeriodicSeq] = {}
    current = seq
    while current.n % 2 == 0:
        g, h = halving_split(current)
        q = current.n // 2
        parts[q] = redeclare(h, seq.n)
        current = PeriodicSeq(q, g.values[:q])
    return parts, redeclare(current, seq.n)


# ---------- Numeric oracle ---------- #


def dft_group_oracle(seq: PeriodicSeq) -> Dict[int, np.ndarray]:
    """
    Floating-point image of the kernel decomposition: take the DFT, keep the
    bins whose root of unity has order d, inverse-transform. Group d is the
    numeric counterpart of the ker Phi_d(E) component.
    """
    n = seq.n
    spectrum = np.fft.fft(np.array([float(v) for v in seq.values], dtype=float))
    orders = np.array([b.order for b in frequency_bins(n)])
    groups: Dict[int, np.ndarray] = {}
    for d in divisors(n):
        masked = np.where(orders == d, spectrum, 0)
        groups[d] = np.fft.ifft(masked)
    return groups
