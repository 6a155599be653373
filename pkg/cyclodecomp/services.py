# cyclodecomp/services.py
from typing import List, Optional
import logging

import numpy as np

from .circulant import (
    Circulant,
    annihilator_consistency,
    annihilator_system,
    associated_periodic_solutions,
    circ_det,
    is_singular,
    to_matrix,
)
from .cyclotomic import CyclotomicTable, euler_phi, factor_unity
from .data_loading import sequence_to_file
from .decompose import (
    Decomposition,
    decompose,
    projectors_for,
    support,
    support_product,
)
from .diffeq import analyze, periodicity_verdict
from .exactmath import RatMatrix, RatPoly, format_rational, nullspace
from .periodic import PeriodicSeq, dft_group_oracle, fundamental_period, halving_chain, halving_split
from .schemas import (
    AnnihilatorOut,
    CirculantOut,
    CyclotomicOut,
    DecompositionOut,
    DiffEqReportOut,
    FactorOut,
    FactorUnityOut,
    HalvingOut,
    PhiOut,
)
from .settings import settings

logger = logging.getLogger("cyclodecomp")


def _matrix_out(m: RatMatrix) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in m.to_rows()]


def oracle_max_error(decomposition: Decomposition, seq: PeriodicSeq) -> float:
    """Largest |exact component - DFT group| over all divisors and grid points."""
    groups = dft_group_oracle(seq)
    worst = 0.0
    for d, part in decomposition.components.items():
        exact = np.array([float(v) for v in part.values])
        worst = max(worst, float(np.max(np.abs(groups[d] - exact))))
    return worst


class AnalysisService:
    """
    Thin service for one analysis run:
      - one shared cyclotomic table
      - projector sets cached per period
      - builds the report payloads the commands print
    """

    def __init__(self, *, workers: Optional[int] = None):
        self.table = CyclotomicTable()
        self.workers = settings.decompose_workers if workers is None else workers
        logger.info("AnalysisService initialized (workers=%d)", self.workers)

    def decomposition(self, seq: PeriodicSeq) -> Decomposition:
        return decompose(
            seq,
            projectors=projectors_for(seq.n, self.table),
            table=self.table,
            workers=self.workers,
        )

    # ---------- cyclo ---------- #

    def cyclotomic_report(self, n: int) -> CyclotomicOut:
        return CyclotomicOut(n=n, poly=self.table.get(n).to_text())

    def phi_report(self, n: int) -> PhiOut:
        return PhiOut(n=n, phi=euler_phi(n))

    def factor_unity_report(self, n: int) -> FactorUnityOut:
        return FactorUnityOut(
            n=n,
            factors=[FactorOut(d=d, poly=p.to_text()) for d, p in factor_unity(n, self.table)],
        )

    # ---------- decompose / halving ---------- #

    def decompose_report(self, seq: PeriodicSeq, *, oracle: bool = False) -> DecompositionOut:
        result = self.decomposition(seq)
        annihilator = support_product(result, table=self.table)
        out = DecompositionOut(
            support=support(result),
            components={str(d): sequence_to_file(part) for d, part in result.components.items()},
            minimal_annihilator=annihilator.to_text(),
            fundamental_period=fundamental_period(seq),
        )
        if oracle:
            out.oracle_max_error = oracle_max_error(result, seq)
            if out.oracle_max_error > settings.oracle_tolerance:
                logger.warning(
                    "DFT oracle error %.3g exceeds tolerance %.3g",
                    out.oracle_max_error,
                    settings.oracle_tolerance,
                )
        return out

    def halving_report(self, seq: PeriodicSeq, *, chain: bool = False) -> HalvingOut:
        if chain:
            parts, remainder = halving_chain(seq)
            return HalvingOut(
                chain={str(q): sequence_to_file(part) for q, part in parts.items()},
                remainder=sequence_to_file(remainder),
            )
        g, h = halving_split(seq)
        return HalvingOut(periodic=sequence_to_file(g), antiperiodic=sequence_to_file(h))

    # ---------- diffeq ---------- #

    def diffeq_report(self, p: RatPoly) -> DiffEqReportOut:
        report = analyze(p, table=self.table)
        return DiffEqReportOut(
            char_poly=report.char_poly.to_text(),
            cyclotomic_factors={str(d): m for d, m in report.cyclotomic_factors.items()},
            residual=report.residual.to_text(),
            has_integer_periodic=report.has_integer_periodic,
            is_cyclotomic_equation=report.is_cyclotomic_equation,
            common_period=report.common_period,
            unit_modulus_flag=report.unit_modulus_flag.value,
            verdict=periodicity_verdict(report),
            sample_solutions={
                str(d): sequence_to_file(s) for d, s in report.sample_solutions.items()
            },
        )

    # ---------- circulant / annihilator ---------- #

    def circulant_report(
        self,
        c: Circulant,
        *,
        det: bool = False,
        singular: bool = False,
        null: bool = False,
    ) -> CirculantOut:
        matrix = to_matrix(c)
        out = CirculantOut(
            # trailing zeros kept so the row length n survives the round trip
            row=",".join(format_rational(a) for a in c.first_row),
            matrix=_matrix_out(matrix),
        )
        if det:
            out.det = format_rational(circ_det(c, table=self.table))
        if singular:
            report = is_singular(c, table=self.table)
            out.singular = report.singular
            out.witnesses = report.witnesses
            out.periodic_solutions = {
                str(d): sequence_to_file(s)
                for d, s in associated_periodic_solutions(c, table=self.table).items()
            }
        if null:
            out.nullspace = [[format_rational(x) for x in v] for v in nullspace(matrix)]
        return out

    def annihilator_report(self, seq: PeriodicSeq) -> AnnihilatorOut:
        system = annihilator_system(seq)
        result = self.decomposition(seq)
        return AnnihilatorOut(
            matrix=_matrix_out(system.matrix),
            nullspace=[[format_rational(x) for x in v] for v in system.basis],
            minimal_annihilator=support_product(result, table=self.table).to_text(),
            consistent=annihilator_consistency(
                seq,
                table=self.table,
                system=system,
                decomposition=result,
            ),
        )
