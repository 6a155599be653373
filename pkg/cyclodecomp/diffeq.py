# cyclodecomp/diffeq.py
"""
Linear constant-coefficient difference equations P(E) y = 0.

Integer-period solutions exist exactly when some Phi_d divides P over Q;
that test is algebraic. Roots of modulus one that are not roots of unity
give periodic solutions of non-integer period; those are only screened.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
from scipy.linalg import companion

from .cyclotomic import CyclotomicTable, cyclotomic, cyclotomic_factors, euler_phi, lcm_all
from .exactmath import ConsistencyError, RatPoly, poly_gcd, squarefree_part
from .periodic import PeriodicSeq, apply, fundamental_period
from .settings import settings

logger = logging.getLogger("cyclodecomp")


class UnitModulusFlag(str, Enum):
    NONE = "none"
    NECESSARY_CONDITION_MET = "necessary_condition_met"
    NUMERICALLY_CONFIRMED = "numerically_confirmed"


@dataclass(frozen=True)
class DiffEqReport:
    char_poly: RatPoly
    cyclotomic_factors: Dict[int, int]
    residual: RatPoly
    has_integer_periodic: bool
    is_cyclotomic_equation: bool
    common_period: Optional[int]
    unit_modulus_flag: UnitModulusFlag
    sample_solutions: Dict[int, PeriodicSeq] = field(default_factory=dict)


def reverse(p: RatPoly) -> RatPoly:
    return p.reverse()


def synth_solution(d: int, *, table: Optional[CyclotomicTable] = None) -> PeriodicSeq:
    """
    One period of the recurrence with characteristic polynomial Phi_d started
    from (1, 0, ..., 0): a nonzero rational element of ker Phi_d(E), hence of
    fundamental period d.
    """
    if d < 1:
        raise ValueError(f"Expected a positive integer, got {d}")
    phi_d = cyclotomic(d, table)
    order = phi_d.degree
    tail = phi_d.coeffs[:order]

    values: List[Fraction] = [Fraction(1)] + [Fraction(0)] * (order - 1)
    while len(values) < d:
        k = len(values) - order
        # Phi_d is monic: y(k + order) = -sum_i c_i y(k + i)
        values.append(-sum((c * values[k + i] for i, c in enumerate(tail)), Fraction(0)))
    seq = PeriodicSeq(d, tuple(values[:d]))

    if not apply(phi_d, seq).is_zero or fundamental_period(seq) != d:
        raise ConsistencyError(f"Recurrence for Phi_{d} did not produce a period-{d} kernel element")
    return seq


def unit_modulus_screen(p: RatPoly, *, tolerance: Optional[float] = None) -> UnitModulusFlag:
    """
    Exact necessary condition: a root on the unit circle comes with its
    reciprocal (= conjugate) root, so gcd(p, reverse(p)) is nonconstant.
    Numeric confirmation: some companion-matrix eigenvalue within tolerance
    of modulus one. Eigenvalues are taken of the squarefree part of that gcd,
    which holds every unit-circle root and has no repeated ones.
    """
    if p.degree < 1:
        raise ValueError("Unit-modulus screen needs a nonconstant polynomial")
    if tolerance is None:
        tolerance = settings.unit_modulus_tolerance

    reciprocal_part = poly_gcd(p, reverse(p))
    if reciprocal_part.is_constant:
        return UnitModulusFlag.NONE

    # scipy wants descending coefficients with a nonzero leading term
    core = squarefree_part(reciprocal_part)
    descending = [float(c) for c in reversed(core.coeffs)]
    eigenvalues = np.linalg.eigvals(companion(descending))
    if np.any(np.abs(np.abs(eigenvalues) - 1.0) <= tolerance):
        return UnitModulusFlag.NUMERICALLY_CONFIRMED
    return UnitModulusFlag.NECESSARY_CONDITION_MET


def analyze(
    p: RatPoly,
    *,
    table: Optional[CyclotomicTable] = None,
    tolerance: Optional[float] = None,
) -> DiffEqReport:
    if p.degree < 1:
        raise ValueError("A difference equation needs a nonconstant characteristic polynomial")
    if p.coeffs[0] == 0:
        raise ValueError("Characteristic polynomial needs a nonzero constant term (a_0 a_n != 0)")

    factors, residual = cyclotomic_factors(p, table)
    has_periodic = bool(factors)
    is_cyclotomic_eq = (
        has_periodic
        and residual.is_constant
        and all(mult == 1 for mult in factors.values())
    )
    common_period = lcm_all(factors) if is_cyclotomic_eq else None
    samples = {d: synth_solution(d, table=table) for d in factors}
    flag = unit_modulus_screen(p, tolerance=tolerance)

    logger.info(
        "Analyzed P=%s: factors=%s residual degree=%d flag=%s",
        p.to_text(),
        factors,
        residual.degree,
        flag.value,
    )
    return DiffEqReport(
        char_poly=p,
        cyclotomic_factors=factors,
        residual=residual,
        has_integer_periodic=has_periodic,
        is_cyclotomic_equation=is_cyclotomic_eq,
        common_period=common_period,
        unit_modulus_flag=flag,
        sample_solutions=samples,
    )


def periodicity_verdict(report: DiffEqReport) -> str:
    if report.is_cyclotomic_equation:
        return f"all grid solutions periodic with common period {report.common_period}"
    if report.has_integer_periodic:
        return "some solutions periodic with integer period"
    if report.unit_modulus_flag is UnitModulusFlag.NUMERICALLY_CONFIRMED:
        return "periodic solutions of arbitrary (non-integer) period indicated"
    return "no periodic solutions detected"


def solution_space_dimension(report: DiffEqReport) -> int:
    """Dimension of the periodic grid solutions: sum of phi(d) over the factors."""
    return sum(euler_phi(d) for d in report.cyclotomic_factors)
