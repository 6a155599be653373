# cyclodecomp/exactmath.py
"""
Exact arithmetic over the rationals: scalars, dense univariate polynomials
and fraction-free matrix elimination. Every other module builds on these.

Text formats
  rational:   optional sign, integer, optional "/" positive integer ("-3/4")
  polynomial: comma-separated ascending coefficients ("1,2,2,1" = 1+2x+2x^2+x^3)
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


class ConsistencyError(RuntimeError):
    """
    An internal cross-check failed: two independent computations disagree or
    an identity that holds by construction was violated. Always a bug.
    """


# ---------- Rationals ---------- #


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"Malformed rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: RationalLike) -> str:
    # Fraction.__str__ already prints "p" or "p/q" in lowest terms
    return str(to_rational(q))


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an exact value to a Fraction. Floats are rejected: they cannot
    carry the exactness the kernel and divisibility tests rely on.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"Expected an exact rational, got {type(value).__name__}: {value!r}")


# ---------- Polynomials ---------- #


@dataclass(frozen=True)
class RatPoly:
    """
    Dense polynomial with rational coefficients in ascending degree order.
    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # --- constructors ---

    @classmethod
    def of(cls, *coeffs: RationalLike) -> "RatPoly":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, c: RationalLike) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "RatPoly":
        if k < 0:
            raise ValueError(f"Negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def unity(cls, n: int) -> "RatPoly":
        """x^n - 1."""
        if n < 1:
            raise ValueError(f"x^n - 1 needs n >= 1, got {n}")
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def parse(cls, text: str) -> "RatPoly":
        fields = [f for f in text.split(",")]
        if not text.strip() or any(not f.strip() for f in fields):
            raise ValueError(f"Malformed polynomial: {text!r}")
        return cls(tuple(parse_rational(f) for f in fields))

    # --- queries ---

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # --- transforms ---

    def monic(self) -> "RatPoly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(1 / self.leading)

    def scale(self, c: RationalLike) -> "RatPoly":
        c = to_rational(c)
        return RatPoly(tuple(c * a for a in self.coeffs))

    def reverse(self) -> "RatPoly":
        """Reciprocal polynomial x^deg * p(1/x): the coefficient list reversed."""
        return RatPoly(tuple(reversed(self.coeffs)))

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def evaluate(self, x):
        # Horner; works for Fractions, ints, floats and complex numbers alike
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(format_rational(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: List[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)

    # --- operators ---

    def __add__(self, other: "RatPoly") -> "RatPoly":
        return poly_add(self, other)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return poly_sub(self, other)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __divmod__(self, other: "RatPoly") -> Tuple["RatPoly", "RatPoly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[1]

    def __pow__(self, k: int) -> "RatPoly":
        return poly_pow(self, k)


def poly_add(a: RatPoly, b: RatPoly) -> RatPoly:
    size = max(len(a.coeffs), len(b.coeffs))
    return RatPoly(tuple(a.coeff(i) + b.coeff(i) for i in range(size)))


def poly_sub(a: RatPoly, b: RatPoly) -> RatPoly:
    size = max(len(a.coeffs), len(b.coeffs))
    return RatPoly(tuple(a.coeff(i) - b.coeff(i) for i in range(size)))


def _integral(coeffs: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Clear denominators: (integer coefficients, common denominator)."""
    den = math.lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def poly_mul(a: RatPoly, b: RatPoly) -> RatPoly:
    if a.is_zero or b.is_zero:
        return RatPoly()
    a_int, a_den = _integral(a.coeffs)
    b_int, b_den = _integral(b.coeffs)
    out = [0] * (len(a_int) + len(b_int) - 1)
    for i, ac in enumerate(a_int):
        if not ac:
            continue
        for j, bc in enumerate(b_int):
            out[i + j] += ac * bc
    den = a_den * b_den
    return RatPoly(tuple(Fraction(c, den) for c in out))


def poly_pow(a: RatPoly, k: int) -> RatPoly:
    if k < 0:
        raise ValueError(f"Negative polynomial power {k}")
    result = RatPoly.one()
    base = a
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_divmod(a: RatPoly, b: RatPoly) -> Tuple[RatPoly, RatPoly]:
    """
    Long division: a = q*b + r with deg r < deg b.
    """
    if b.is_zero:
        raise ZeroDivisionError("Polynomial division by the zero polynomial")
    db = b.degree
    if a.degree < db:
        return RatPoly(), a

    rem = list(a.coeffs)
    quot = [Fraction(0)] * (a.degree - db + 1)
    lead = b.leading
    for i in range(a.degree - db, -1, -1):
        coef = rem[i + db] / lead
        quot[i] = coef
        if coef:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= coef * bc
    return RatPoly(tuple(quot)), RatPoly(tuple(rem[:db]))


def poly_mod(a: RatPoly, b: RatPoly) -> RatPoly:
    return poly_divmod(a, b)[1]


def poly_mulmod(a: RatPoly, b: RatPoly, m: RatPoly) -> RatPoly:
    return poly_mod(poly_mul(a, b), m)


def poly_divides(b: RatPoly, a: RatPoly) -> bool:
    """True iff b divides a over Q."""
    return poly_mod(a, b).is_zero


def poly_exact_div(a: RatPoly, b: RatPoly) -> RatPoly:
    """Division that must leave no remainder; a remainder is an internal error."""
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise ConsistencyError(f"Division of ({a}) by ({b}) is not exact: remainder {r}")
    return q


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor over Q (Euclid, monic remainders)."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, poly_mod(a, b).monic()
    return a.monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """Monic p / gcd(p, p'): same roots as p, each once."""
    if p.is_zero:
        raise ValueError("The zero polynomial has no squarefree part")
    if p.is_constant:
        return RatPoly.one()
    return poly_exact_div(p, poly_gcd(p, p.derivative())).monic()


def poly_xgcd(a: RatPoly, b: RatPoly) -> Tuple[RatPoly, RatPoly, RatPoly]:
    """
    Extended Euclid: returns (g, u, v) with u*a + v*b = g, g the monic gcd.
    When a divides b the cofactor of b is zero.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("xgcd of two zero polynomials is undefined")

    if not a.is_zero and poly_divides(a, b):
        inv = 1 / a.leading
        return a.monic(), RatPoly.constant(inv), RatPoly()

    r0, r1 = a, b
    s0, s1 = RatPoly.one(), RatPoly()
    t0, t1 = RatPoly(), RatPoly.one()
    while not r1.is_zero:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1

    inv = 1 / r0.leading
    g, u, v = r0.scale(inv), s0.scale(inv), t0.scale(inv)
    if u * a + v * b != g:
        raise ConsistencyError(f"xgcd identity failed for ({a}), ({b})")
    return g, u, v


def sylvester_matrix(a: RatPoly, b: RatPoly) -> "RatMatrix":
    m, n = a.degree, b.degree
    size = m + n
    a_desc = list(reversed(a.coeffs))
    b_desc = list(reversed(b.coeffs))
    rows: List[List[Fraction]] = []
    for i in range(n):
        rows.append([Fraction(0)] * i + a_desc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + b_desc + [Fraction(0)] * (size - n - 1 - i))
    return RatMatrix.from_rows(rows, cols=size)


def poly_resultant(a: RatPoly, b: RatPoly) -> Fraction:
    """
    Res(a, b) = lc(a)^deg(b) * prod of b over the roots of a, as the
    determinant of the Sylvester matrix.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("Resultant is undefined for the zero polynomial")
    return bareiss_det(sylvester_matrix(a, b))


# ---------- Matrices ---------- #


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Negative matrix shape {self.rows}x{self.cols}")
        entries = tuple(to_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[RationalLike]],
        cols: Optional[int] = None,
    ) -> "RatMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("Ragged rows: every row needs the same length")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def matvec(self, v: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError(f"Vector of length {len(v)} does not fit {self.cols} columns")
        vec = [to_rational(x) for x in v]
        return tuple(
            sum((a * x for a, x in zip(self.row(i), vec)), Fraction(0))
            for i in range(self.rows)
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def bareiss_det(m: RatMatrix) -> Fraction:
    """
    Determinant by Bareiss' fraction-free elimination with row pivoting.
    Rows are first cleared of denominators so the elimination runs on
    Python ints. The 0x0 matrix has determinant 1.
    """
    if not m.is_square:
        raise ValueError(f"Determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Fraction(1)

    a: List[List[int]] = []
    scale = 1
    for row in m.to_rows():
        den = math.lcm(*(x.denominator for x in row))
        a.append([x.numerator * (den // x.denominator) for x in row])
        scale *= den

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)

        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # division by the previous pivot is exact
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = pivot

    return Fraction(sign * a[n - 1][n - 1], scale)


def _rref(m: RatMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    a = m.to_rows()
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: RatMatrix) -> int:
    return len(_rref(m)[1])


def nullspace(m: RatMatrix) -> List[Tuple[Fraction, ...]]:
    """
    Basis of the exact right nullspace {v : M v = 0}. Each basis vector is
    scaled so that its first nonzero entry is 1. Empty iff M has full
    column rank.
    """
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis: List[Tuple[Fraction, ...]] = []
    for free in (j for j in range(m.cols) if j not in pivot_set):
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][free]
        first = next(x for x in v if x != 0)
        basis.append(tuple(x / first for x in v))

    for v in basis:
        if any(m.matvec(v)):
            raise ConsistencyError(f"Nullspace vector {v} does not satisfy Mv = 0")
    return basis


def rational_vector(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)
