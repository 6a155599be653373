# cyclodecomp/decompose.py
"""
Direct-sum decomposition of the period-n grid sequences

    P_n = (+)_{d | n} ker Phi_d(E)

The operator algebra on P_n is Q[x]/(x^n - 1). For each d | n the cofactor
Q_d = (x^n - 1)/Phi_d is coprime to Phi_d, so extended Euclid gives R_d with
R_d Q_d = 1 (mod Phi_d), and pi_d = R_d Q_d mod (x^n - 1) is the projector
onto ker Phi_d(E) along the other kernels.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional

from .cyclotomic import CyclotomicTable, cyclotomic, divisors, euler_phi, lcm_all
from .exactmath import ConsistencyError, RatPoly, poly_exact_div, poly_mod, poly_mul, poly_xgcd
from .periodic import PeriodicSeq, ShiftPoly, apply

logger = logging.getLogger("cyclodecomp")


@dataclass(frozen=True)
class ProjectorSet:
    n: int
    projectors: Dict[int, ShiftPoly]

    def __getitem__(self, d: int) -> ShiftPoly:
        return self.projectors[d]

    @property
    def divisors(self) -> List[int]:
        return sorted(self.projectors)


@dataclass(frozen=True)
class Decomposition:
    n: int
    components: Dict[int, PeriodicSeq]

    def __getitem__(self, d: int) -> PeriodicSeq:
        return self.components[d]


def _verify_projectors(n: int, projectors: Dict[int, RatPoly]) -> None:
    modulus = RatPoly.unity(n)
    total = RatPoly()
    ds = sorted(projectors)
    for i, d in enumerate(ds):
        pi_d = projectors[d]
        total = total + pi_d
        if poly_mod(poly_mul(pi_d, pi_d), modulus) != pi_d:
            raise ConsistencyError(f"pi_{d} is not idempotent mod x^{n} - 1")
        for e in ds[i + 1:]:
            if not poly_mod(poly_mul(pi_d, projectors[e]), modulus).is_zero:
                raise ConsistencyError(f"pi_{d} * pi_{e} != 0 mod x^{n} - 1")
    if poly_mod(total, modulus) != RatPoly.one():
        raise ConsistencyError(f"Projectors for n={n} do not sum to the identity")


def build_projectors(
    n: int,
    *,
    table: Optional[CyclotomicTable] = None,
    verify: bool = True,
) -> ProjectorSet:
    if n < 1:
        raise ValueError(f"Expected a positive integer, got {n}")

    modulus = RatPoly.unity(n)
    projectors: Dict[int, RatPoly] = {}
    for d in divisors(n):
        phi_d = cyclotomic(d, table)
        cofactor = poly_exact_div(modulus, phi_d)
        g, r_d, _ = poly_xgcd(cofactor, phi_d)
        if g != RatPoly.one():
            # the roots of x^n - 1 are distinct, so this cannot happen
            raise ConsistencyError(f"gcd((x^{n}-1)/Phi_{d}, Phi_{d}) = {g}, expected 1")
        projectors[d] = poly_mod(poly_mul(r_d, cofactor), modulus)

    if verify:
        _verify_projectors(n, projectors)
    logger.debug("Built %d projectors for n=%d", len(projectors), n)
    return ProjectorSet(n=n, projectors={d: ShiftPoly(p) for d, p in projectors.items()})


@lru_cache(maxsize=256)
def projectors_for(n: int, table: Optional[CyclotomicTable] = None) -> ProjectorSet:
    """Projector sets cached per (n, table); tables hash by identity."""
    return build_projectors(n, table=table)


def decompose(
    seq: PeriodicSeq,
    *,
    projectors: Optional[ProjectorSet] = None,
    table: Optional[CyclotomicTable] = None,
    workers: int = 1,
) -> Decomposition:
    """
    components[d] = pi_d(E) seq. Verified: the components sum to seq and each
    is annihilated by its Phi_d(E).
    """
    n = seq.n
    if projectors is None:
        projectors = projectors_for(n, table)
    if projectors.n != n:
        raise ValueError(f"Projector set for n={projectors.n} cannot decompose period {n}")

    ds = projectors.divisors
    if workers > 1 and len(ds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda d: apply(projectors[d], seq), ds))
    else:
        parts = [apply(projectors[d], seq) for d in ds]
    result = Decomposition(n=n, components=dict(zip(ds, parts)))

    if reconstruct(result) != seq:
        raise ConsistencyError(f"Components of {seq.values} do not sum back to the input")
    for d, part in result.components.items():
        if not apply(cyclotomic(d, table), part).is_zero:
            raise ConsistencyError(f"Component {d} is not annihilated by Phi_{d}(E)")
    return result


def reconstruct(decomposition: Decomposition) -> PeriodicSeq:
    total = PeriodicSeq.zeros(decomposition.n)
    for part in decomposition.components.values():
        total = total + part
    return total


def support(decomposition: Decomposition) -> List[int]:
    return sorted(d for d, part in decomposition.components.items() if not part.is_zero)


def support_product(decomposition: Decomposition, *, table: Optional[CyclotomicTable] = None) -> RatPoly:
    result = RatPoly.one()
    for d in support(decomposition):
        result = poly_mul(result, cyclotomic(d, table))
    return result


def minimal_annihilator(seq: PeriodicSeq, *, table: Optional[CyclotomicTable] = None) -> RatPoly:
    """prod of Phi_d over the support; 1 for the zero sequence."""
    return support_product(decompose(seq, table=table), table=table)


def support_period(decomposition: Decomposition) -> int:
    """lcm of the support: the fundamental period of the decomposed sequence."""
    return lcm_all(support(decomposition))


def kernel_dimension(n: int, d: int) -> int:
    """dim_Q ker Phi_d(E) inside P_n, which is phi(d)."""
    if n < 1 or d < 1 or n % d:
        raise ValueError(f"{d} is not a divisor of {n}")
    return euler_phi(d)


def kernel_sum_check(
    n: int,
    d1: int,
    d2: int,
    *,
    table: Optional[CyclotomicTable] = None,
) -> bool:
    """
    ker(L M) = ker L + ker M for L = Phi_{d1}(E), M = Phi_{d2}(E) on P_n:
    every basis sequence of ker(LM) splits into its d1 and d2 components.
    """
    if d1 == d2:
        raise ValueError("The kernel sum needs two distinct cyclotomic factors")
    for d in (d1, d2):
        if d < 1 or n % d:
            raise ValueError(f"{d} is not a divisor of {n}")

    projectors = projectors_for(n, table)
    product = poly_mul(cyclotomic(d1, table), cyclotomic(d2, table))
    # ker(LM) on P_n is the image of the sum of the two projectors
    joint = ShiftPoly(projectors[d1].poly + projectors[d2].poly)
    for k in range(n):
        basis = PeriodicSeq(n, tuple(1 if i == k else 0 for i in range(n)))
        y = apply(joint, basis)
        if not apply(product, y).is_zero:
            return False
        left, right = apply(projectors[d1], y), apply(projectors[d2], y)
        if not apply(cyclotomic(d1, table), left).is_zero:
            return False
        if not apply(cyclotomic(d2, table), right).is_zero:
            return False
        if left + right != y:
            return False
    return True
