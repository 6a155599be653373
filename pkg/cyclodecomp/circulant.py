# cyclodecomp/circulant.py
"""
Circulant matrices C(a_0, ..., a_{n-1}), row i being the first row rotated
right i times:

    [ a_0      a_1  ...  a_{n-1} ]
    [ a_{n-1}  a_0  ...  a_{n-2} ]
    [ ...                        ]
    [ a_1      a_2  ...  a_0     ]

det C = prod_j f(omega_j) over the n-th roots of unity, f the associated
polynomial. Grouping the roots by order turns that product into
prod_{d | n} Res(Phi_d, f), which is exact.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from .cyclotomic import CyclotomicTable, cyclotomic, divisors, euler_phi
from .decompose import Decomposition, decompose, support
from .diffeq import synth_solution
from .exactmath import (
    ConsistencyError,
    RationalLike,
    RatMatrix,
    RatPoly,
    bareiss_det,
    nullspace,
    poly_divides,
    poly_resultant,
    to_rational,
)
from .periodic import PeriodicSeq, apply

logger = logging.getLogger("cyclodecomp")


@dataclass(frozen=True)
class AssociatedPoly:
    """f(x) = a_0 + a_1 x + ... + a_{n-1} x^{n-1}, degree <= n - 1."""

    poly: RatPoly
    n: int


@dataclass(frozen=True)
class Circulant:
    first_row: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        row = tuple(to_rational(a) for a in self.first_row)
        if not row:
            raise ValueError("A circulant needs a nonempty first row")
        object.__setattr__(self, "first_row", row)

    @classmethod
    def of(cls, *row: RationalLike) -> "Circulant":
        return cls(tuple(row))

    @property
    def n(self) -> int:
        return len(self.first_row)

    @property
    def is_unital(self) -> bool:
        return all(a in (0, 1) for a in self.first_row)

    def associated(self) -> AssociatedPoly:
        return AssociatedPoly(poly=RatPoly(self.first_row), n=self.n)


class SingularityReport(NamedTuple):
    singular: bool
    witnesses: List[int]


class AnnihilatorSystem(NamedTuple):
    matrix: RatMatrix
    basis: List[Tuple[Fraction, ...]]


def to_matrix(c: Circulant) -> RatMatrix:
    n = c.n
    return RatMatrix.from_rows(
        [[c.first_row[(j - i) % n] for j in range(n)] for i in range(n)],
        cols=n,
    )


def resultant_det(c: Circulant, *, table: Optional[CyclotomicTable] = None) -> Fraction:
    """prod_{d | n} Res(Phi_d, f): the eigenvalue product grouped by root order."""
    f = c.associated().poly
    if f.is_zero:
        return Fraction(0)
    det = Fraction(1)
    for d in divisors(c.n):
        det *= poly_resultant(cyclotomic(d, table), f)
    return det


def circ_det(c: Circulant, *, table: Optional[CyclotomicTable] = None) -> Fraction:
    elimination = bareiss_det(to_matrix(c))
    product = resultant_det(c, table=table)
    if elimination != product:
        raise ConsistencyError(
            f"Circulant {[str(a) for a in c.first_row]}: Bareiss det {elimination} "
            f"!= resultant product {product}"
        )
    return elimination


def is_singular(c: Circulant, *, table: Optional[CyclotomicTable] = None) -> SingularityReport:
    """
    Singular iff gcd(f, x^n - 1) != 1 iff some Phi_d (d | n) divides f;
    Phi_d is irreducible, so per-factor divisibility is the certificate.
    """
    f = c.associated().poly
    witnesses = [d for d in divisors(c.n) if f.is_zero or poly_divides(cyclotomic(d, table), f)]
    return SingularityReport(singular=bool(witnesses), witnesses=witnesses)


def associated_periodic_solutions(
    c: Circulant,
    *,
    table: Optional[CyclotomicTable] = None,
) -> Dict[int, PeriodicSeq]:
    """
    A singular circulant's associated polynomial f gives f(E) y = 0 a periodic
    solution: one per witness d, taken from ker Phi_d(E).
    """
    f = c.associated().poly
    solutions: Dict[int, PeriodicSeq] = {}
    for d in is_singular(c, table=table).witnesses:
        y = synth_solution(d, table=table)
        if not apply(f, y).is_zero:
            raise ConsistencyError(f"Witness Phi_{d} does not give a solution of f(E) y = 0")
        solutions[d] = y
    return solutions


def annihilator_system(seq: PeriodicSeq) -> AnnihilatorSystem:
    """
    M[j][k] = y(j + k): row j is sum_k a_k E^k y = 0 shifted j times.
    Its nullspace is every coefficient vector a with sum_k a_k y(x + k) = 0
    for all x. The nullspace can be trivial (e.g. y = (1, 0, ..., 0)).
    """
    n = seq.n
    matrix = RatMatrix.from_rows([[seq(j + k) for k in range(n)] for j in range(n)], cols=n)
    basis = nullspace(matrix)
    for a in basis:
        if not apply(RatPoly(a), seq).is_zero:
            raise ConsistencyError(f"Nullspace vector {a} does not annihilate the sequence")
    return AnnihilatorSystem(matrix=matrix, basis=basis)


def annihilator_consistency(
    seq: PeriodicSeq,
    *,
    table: Optional[CyclotomicTable] = None,
    system: Optional[AnnihilatorSystem] = None,
    decomposition: Optional[Decomposition] = None,
) -> bool:
    """
    Nullspace nontrivial <=> support misses some divisor, and
    dim nullspace = n - sum_{d in support} phi(d).

    A system or decomposition already computed for seq can be passed in.
    """
    if system is None:
        system = annihilator_system(seq)
    if decomposition is None:
        decomposition = decompose(seq, table=table)
    if decomposition.n != seq.n:
        raise ValueError(f"Decomposition of period {decomposition.n} does not belong to period {seq.n}")
    supp = support(decomposition)
    dim = len(system.basis)
    expected = seq.n - sum(euler_phi(d) for d in supp)
    partial_support = supp != divisors(seq.n)
    consistent = ((dim > 0) == partial_support) and dim == expected
    if not consistent:
        logger.warning(
            "Annihilator mismatch for %s: nullspace dim %d, support %s",
            seq.to_text(),
            dim,
            supp,
        )
    return consistent
