# cyclodecomp/cyclotomic.py
"""
Number-theoretic helpers and exact cyclotomic polynomials.

    x^n - 1 = prod_{d | n} Phi_d(x),   deg Phi_d = phi(d)
"""
from __future__ import annotations

import logging
import math
import threading
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .exactmath import ConsistencyError, RatPoly, poly_divmod, poly_exact_div, poly_mul

logger = logging.getLogger("cyclodecomp")


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"Expected a positive integer, got {n}")


def prime_factors(n: int) -> Dict[int, int]:
    """Trial division: {prime: exponent}."""
    _require_positive(n)
    factors: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def divisors(n: int) -> List[int]:
    _require_positive(n)
    small: List[int] = []
    large: List[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    factors = prime_factors(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def lcm_all(values) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, v)
    return result


def totients(limit: int) -> List[int]:
    """Sieve: phi(k) for 0 <= k <= limit (phi(0) reported as 0)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


@lru_cache(maxsize=None)
def candidate_indices(degree: int) -> Tuple[int, ...]:
    """
    Every d with phi(d) == degree. phi(d) >= sqrt(d/2) for d > 1, so
    d <= 2*degree^2 bounds the search; d in {1, 2} covers degree 1.
    """
    if degree < 1:
        return ()
    if degree == 1:
        return (1, 2)
    phi = totients(2 * degree * degree)
    return tuple(d for d in range(3, len(phi)) if phi[d] == degree)


class CyclotomicTable:
    """
    Append-only memo n -> Phi_n. Guarded by a lock so one table can be shared
    by threads; results do not depend on sharing.
    """

    def __init__(self) -> None:
        self._memo: Dict[int, RatPoly] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, n: int) -> bool:
        return n in self._memo

    def get(self, n: int) -> RatPoly:
        _require_positive(n)
        cached = self._memo.get(n)
        if cached is not None:
            return cached
        with self._lock:
            if n not in self._memo:
                self._memo[n] = self._build(n)
                logger.debug("Cyclotomic table: added Phi_%d (size %d)", n, len(self._memo))
            return self._memo[n]

    def _build(self, n: int) -> RatPoly:
        # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
        denominator = RatPoly.one()
        for d in divisors(n)[:-1]:
            denominator = poly_mul(denominator, self.get(d))
        phi_n = poly_exact_div(RatPoly.unity(n), denominator)
        if not (phi_n.is_monic and phi_n.has_integer_coeffs() and phi_n.degree == euler_phi(n)):
            raise ConsistencyError(f"Phi_{n} = {phi_n} is not monic integer of degree phi({n})")
        return phi_n


default_table = CyclotomicTable()


def cyclotomic(n: int, table: Optional[CyclotomicTable] = None) -> RatPoly:
    return (table if table is not None else default_table).get(n)


def cyclotomic_mobius_oracle(n: int) -> RatPoly:
    """
    Independent construction Phi_n = prod_{d | n} (x^{n/d} - 1)^{mu(d)}:
    multiply the mu = +1 factors, then divide exactly by the mu = -1 ones.
    """
    _require_positive(n)
    numerator = RatPoly.one()
    denominator = RatPoly.one()
    for d in divisors(n):
        mu = mobius(d)
        if mu == 1:
            numerator = poly_mul(numerator, RatPoly.unity(n // d))
        elif mu == -1:
            denominator = poly_mul(denominator, RatPoly.unity(n // d))
    return poly_exact_div(numerator, denominator)


def factor_unity(n: int, table: Optional[CyclotomicTable] = None) -> List[Tuple[int, RatPoly]]:
    """[(d, Phi_d) for d | n], whose product is x^n - 1."""
    return [(d, cyclotomic(d, table)) for d in divisors(n)]


def is_cyclotomic(p: RatPoly, table: Optional[CyclotomicTable] = None) -> Optional[int]:
    if p.is_zero:
        raise ValueError("The zero polynomial is not a cyclotomic candidate")
    # Cheap filters: Phi_d is monic, integral, with constant term +-1
    if p.degree < 1 or not p.is_monic or not p.has_integer_coeffs() or abs(p.coeffs[0]) != 1:
        return None
    for d in candidate_indices(p.degree):
        if cyclotomic(d, table) == p:
            return d
    return None


def cyclotomic_factors(
    p: RatPoly,
    table: Optional[CyclotomicTable] = None,
) -> Tuple[Dict[int, int], RatPoly]:
    """
    Divide out every Phi_d that divides p, as many times as it does.
    Returns ({d: multiplicity}, residual) with
        p = residual * prod Phi_d^multiplicity
    and no cyclotomic factor left in the residual.
    """
    if p.is_zero:
        raise ValueError("Cannot extract cyclotomic factors of the zero polynomial")

    factors: Dict[int, int] = {}
    residual = p
    phi = totients(max(2, 2 * p.degree * p.degree))
    for d in range(1, len(phi)):
        if phi[d] > residual.degree:
            continue
        phi_d = cyclotomic(d, table)
        while residual.degree >= phi_d.degree:
            q, r = poly_divmod(residual, phi_d)
            if not r.is_zero:
                break
            residual = q
            factors[d] = factors.get(d, 0) + 1
    return dict(sorted(factors.items())), residual
