# cyclodecomp/selfcheck.py
"""
Property suites over every module, run by `main.py selfcheck`.

Each suite walks its inputs from small to large and stops at the first
violation, so the reported input is the smallest one that fails.
"""
from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .circulant import Circulant, annihilator_consistency, annihilator_system, circ_det, is_singular
from .cyclotomic import (
    CyclotomicTable,
    cyclotomic,
    cyclotomic_factors,
    cyclotomic_mobius_oracle,
    divisors,
    euler_phi,
    is_cyclotomic,
    lcm_all,
)
from .decompose import build_projectors, decompose, kernel_sum_check, projectors_for, reconstruct, support
from .diffeq import analyze, reverse, synth_solution
from .exactmath import (
    RatMatrix,
    RatPoly,
    bareiss_det,
    nullspace,
    poly_divmod,
    poly_gcd,
    poly_mod,
    poly_mul,
    poly_xgcd,
    rank,
)
from .periodic import (
    PeriodicSeq,
    ShiftPoly,
    apply,
    dft_group_oracle,
    fundamental_period,
    halving_split,
    is_antiperiodic,
    redeclare,
    shift,
)
from .schemas import SelfCheckOut, SuiteResult
from .settings import settings

logger = logging.getLogger("cyclodecomp")

# Phi_1 .. Phi_12, ascending coefficients
GOLDEN_CYCLOTOMIC: Dict[int, Tuple[int, ...]] = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    11: (1,) * 11,
    12: (1, 0, -1, 0, 1),
}


class InvariantViolation(AssertionError):
    """A property suite found an input that breaks its invariant."""


def check(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)


# ---------- Random inputs ---------- #


def random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_poly(rng: random.Random, max_degree: int = 8, bound: int = 5) -> RatPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)] + [rng.choice([-2, -1, 1, 2, 3])]
    return RatPoly(tuple(coeffs))


def random_seq(rng: random.Random, n: int) -> PeriodicSeq:
    return PeriodicSeq(n, tuple(random_rational(rng) for _ in range(n)))


def random_non_cyclotomic(rng: random.Random, table: Optional[CyclotomicTable] = None) -> RatPoly:
    """A nonconstant factor with no cyclotomic divisor."""
    while True:
        p = random_poly(rng, max_degree=3)
        if p.degree >= 1 and p.coeffs[0] != 0 and not cyclotomic_factors(p, table)[0]:
            return p


def cofactor_det(rows: List[List[Fraction]]) -> Fraction:
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_det(minor)
    return total


# ---------- Suites ---------- #

# max_n at which every suite runs at its full bound
FULL_SCALE_MAX_N = 24


@dataclass(frozen=True)
class SuiteBounds:
    """
    Per-suite ranges and case counts. The defaults are the full acceptance
    scale, which `selfcheck --max-n 24` runs.
    """

    poly_cases: int = 200
    bareiss_cases: int = 500
    nullspace_cases: int = 100
    cyclotomic_n: int = 200
    mobius_n: int = 64
    is_cyclotomic_n: int = 100
    totient_n: int = 1000
    factor_cases: int = 200
    factor_d: int = 20
    shift_n: int = 12
    shift_samples: int = 20
    projector_n: int = 48
    decompose_n: int = 24
    decompose_samples: int = 100
    oracle_n: int = 64
    oracle_samples: int = 20
    synth_d: int = 30
    unity_n: int = 24
    diffeq_samples: int = 20
    circulant_exhaustive_n: int = 3
    unital_n: int = 6
    circulant_n: int = 8
    circulant_cases: int = 1000
    annihilator_n: int = 12
    annihilator_samples: int = 200

    @classmethod
    def for_run(cls, max_n: int, samples: Optional[int] = None) -> "SuiteBounds":
        """
        Range fields (ending in _n or _d) scale by max_n / FULL_SCALE_MAX_N,
        never below 1. An explicit `samples` replaces every per-n count.
        """
        if max_n < 1:
            raise ValueError(f"selfcheck needs max_n >= 1, got {max_n}")
        if samples is not None and samples < 0:
            raise ValueError(f"samples must be >= 0, got {samples}")
        full = cls()
        changes: Dict[str, int] = {}
        for f in fields(cls):
            value = getattr(full, f.name)
            if f.name.endswith(("_n", "_d")):
                changes[f.name] = max(1, value * max_n // FULL_SCALE_MAX_N)
            elif samples is not None and f.name.endswith("_samples"):
                changes[f.name] = samples
        return replace(full, **changes)


SuiteFn = Callable[[random.Random, SuiteBounds, CyclotomicTable], int]


def suite_poly_divmod(rng, bounds, table) -> int:
    for _ in range(bounds.poly_cases):
        a, b = random_poly(rng), random_poly(rng)
        q, r = poly_divmod(a, b)
        check(q * b + r == a and r.degree < b.degree, f"divmod({a.to_text()}, {b.to_text()})")
    return bounds.poly_cases


def suite_poly_gcd(rng, bounds, table) -> int:
    for _ in range(bounds.poly_cases):
        common = random_poly(rng, max_degree=3)
        a = random_poly(rng, max_degree=5) * common
        b = random_poly(rng, max_degree=5) * common
        g, u, v = poly_xgcd(a, b)
        check(u * a + v * b == g, f"xgcd identity for ({a.to_text()}), ({b.to_text()})")
        g2 = poly_gcd(a, b)
        check(g2 == g and g2.is_monic, f"gcd monic/agreement for ({a.to_text()}), ({b.to_text()})")
        check(
            poly_mod(a, g2).is_zero and poly_mod(b, g2).is_zero,
            f"gcd divides both for ({a.to_text()}), ({b.to_text()})",
        )
    return bounds.poly_cases


def suite_bareiss(rng, bounds, table) -> int:
    for _ in range(bounds.bareiss_cases):
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        check(
            bareiss_det(RatMatrix.from_rows(rows)) == cofactor_det(rows),
            f"bareiss vs cofactor on {[[str(x) for x in r] for r in rows]}",
        )
    return bounds.bareiss_cases


def suite_nullspace(rng, bounds, table) -> int:
    for _ in range(bounds.nullspace_cases):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = RatMatrix.from_rows([[rng.randint(-1, 1) for _ in range(c)] for _ in range(r)])
        basis = nullspace(m)
        check(len(basis) == m.cols - rank(m), f"nullspace dimension on {m.to_rows()}")
        check(all(not any(m.matvec(v)) for v in basis), f"nullspace vectors on {m.to_rows()}")
    return bounds.nullspace_cases


def suite_cyclotomic_golden(rng, bounds, table) -> int:
    for n, coeffs in GOLDEN_CYCLOTOMIC.items():
        check(cyclotomic(n, table) == RatPoly(coeffs), f"Phi_{n} golden value")
    return len(GOLDEN_CYCLOTOMIC)


def suite_cyclotomic_identities(rng, bounds, table) -> int:
    cases = 0
    for n in range(1, bounds.cyclotomic_n + 1):
        phi_n = cyclotomic(n, table)
        check(
            phi_n.is_monic and phi_n.has_integer_coeffs() and phi_n.degree == euler_phi(n),
            f"Phi_{n} shape",
        )
        product = RatPoly.one()
        for d in divisors(n):
            product = poly_mul(product, cyclotomic(d, table))
        check(product == RatPoly.unity(n), f"prod Phi_d = x^{n} - 1")
        cases += 1
    for n in range(1, bounds.mobius_n + 1):
        check(cyclotomic_mobius_oracle(n) == cyclotomic(n, table), f"Mobius oracle for n={n}")
        cases += 1
    for n in range(1, bounds.is_cyclotomic_n + 1):
        check(is_cyclotomic(cyclotomic(n, table), table) == n, f"is_cyclotomic round trip for n={n}")
        cases += 1
    for n in range(1, bounds.totient_n + 1):
        check(sum(euler_phi(d) for d in divisors(n)) == n, f"totient sum for n={n}")
        cases += 1
    return cases


def suite_cyclotomic_factors(rng, bounds, table) -> int:
    for _ in range(bounds.factor_cases):
        p = RatPoly.one()
        for _ in range(rng.randint(0, 3)):
            p = p * cyclotomic(rng.randint(1, bounds.factor_d), table)
        if rng.random() < 0.7:
            p = p * random_non_cyclotomic(rng, table)
        factors, residual = cyclotomic_factors(p, table)
        rebuilt = residual
        for d, mult in factors.items():
            rebuilt = rebuilt * cyclotomic(d, table) ** mult
        check(rebuilt == p, f"cyclotomic_factors reconstruction for {p.to_text()}")
        check(not cyclotomic_factors(residual, table)[0], f"residual of {p.to_text()} still cyclotomic")
    return bounds.factor_cases


def suite_shift_calculus(rng, bounds, table) -> int:
    cases = 0
    for n in range(1, bounds.shift_n + 1):
        for _ in range(bounds.shift_samples):
            s = random_seq(rng, n)
            a, b = rng.randint(-3 * n, 3 * n), rng.randint(-3 * n, 3 * n)
            check(shift(shift(s, a), b) == shift(s, a + b), f"shift composition n={n} a={a} b={b}")
            p, q = ShiftPoly(random_poly(rng, 4)), ShiftPoly(random_poly(rng, 4))
            check(apply(p + q, s) == apply(p, s) + apply(q, s), f"apply additivity n={n}")
            check(apply(p * q, s) == apply(p, apply(q, s)), f"apply composition n={n}")
            check(apply(RatPoly.unity(n), s).is_zero, f"(E^{n} - I) annihilates period {n}")
            if n % 2 == 0:
                g, h = halving_split(s)
                check(g + h == s, f"halving split sum n={n}")
                check(shift(g, n // 2) == g and shift(h, n // 2) == -h, f"halving split parts n={n}")
            cases += 1
    return cases


def suite_projectors(rng, bounds, table) -> int:
    for n in range(1, bounds.projector_n + 1):
        # build_projectors verifies idempotence, orthogonality and completeness
        build_projectors(n, table=table, verify=True)
        ds = divisors(n)
        if len(ds) >= 2:
            check(kernel_sum_check(n, ds[0], ds[-1], table=table), f"kernel sum lemma n={n}")
    return bounds.projector_n


def suite_decomposition(rng, bounds, table) -> int:
    cases = 0
    for n in range(1, bounds.decompose_n + 1):
        projectors = projectors_for(n, table)
        for _ in range(bounds.decompose_samples):
            s = random_seq(rng, n)
            result = decompose(s, projectors=projectors, table=table)
            check(reconstruct(result) == s, f"reconstruct {s.to_text()}")
            for d, part in result.components.items():
                check(apply(cyclotomic(d, table), part).is_zero, f"Phi_{d} annihilation {s.to_text()}")
                if not part.is_zero:
                    check(fundamental_period(part) == d, f"component {d} period for {s.to_text()}")
                if d > 1 and d & (d - 1) == 0 and not part.is_zero:
                    check(is_antiperiodic(part, d // 2), f"component {d} antiperiodic for {s.to_text()}")
            check(
                fundamental_period(s) == lcm_all(support(result)),
                f"fundamental period = lcm(support) for {s.to_text()}",
            )
            cases += 1
    return cases


def suite_oracle(rng, bounds, table) -> int:
    cases = 0
    tol = settings.oracle_tolerance
    for n in range(1, bounds.oracle_n + 1):
        projectors = projectors_for(n, table)
        for _ in range(bounds.oracle_samples):
            s = random_seq(rng, n)
            groups = dft_group_oracle(s)
            values = np.array([float(v) for v in s.values])
            check(
                float(np.max(np.abs(sum(groups.values()) - values))) <= tol,
                f"oracle groups sum to input {s.to_text()}",
            )
            for d, part in decompose(s, projectors=projectors, table=table).components.items():
                exact = np.array([float(v) for v in part.values])
                check(
                    float(np.max(np.abs(groups[d] - exact))) <= tol,
                    f"oracle group {d} agreement for {s.to_text()}",
                )
            cases += 1
    return cases


def suite_diffeq(rng, bounds, table) -> int:
    cases = 0
    for d in range(1, bounds.synth_d + 1):
        y = synth_solution(d, table=table)
        check(apply(cyclotomic(d, table), y).is_zero and fundamental_period(y) == d, f"synth d={d}")
        cases += 1

    for n in range(1, bounds.unity_n + 1):
        report = analyze(RatPoly.unity(n), table=table)
        check(list(report.cyclotomic_factors) == divisors(n), f"x^{n} - 1 factor set")
        cases += 1

    for _ in range(bounds.diffeq_samples):
        ds = rng.sample(range(1, bounds.factor_d + 1), k=min(rng.randint(1, 3), bounds.factor_d))
        r = random_non_cyclotomic(rng, table)
        p = r
        for d in ds:
            p = p * cyclotomic(d, table)
        report = analyze(p, table=table)
        check(report.cyclotomic_factors == {d: 1 for d in sorted(ds)}, f"factor recovery for {p.to_text()}")
        check(report.residual == r, f"residual recovery for {p.to_text()}")
        check(reverse(reverse(p)) == p, f"reverse involution for {p.to_text()}")

        cyc = RatPoly.one()
        for d in ds:
            cyc = cyc * cyclotomic(d, table)
        cyc_report = analyze(cyc, table=table)
        period = cyc_report.common_period
        check(cyc_report.is_cyclotomic_equation and period == lcm_all(ds), f"cyclotomic verdict {ds}")
        span = PeriodicSeq.zeros(period)
        for s in cyc_report.sample_solutions.values():
            span = span + redeclare(s, period).scale(random_rational(rng))
        check(apply(cyc, span).is_zero, f"span of sample solutions for {ds}")
        cases += 1
    return cases


def suite_circulant(rng, bounds, table) -> int:
    cases = 0
    for n in range(1, bounds.circulant_exhaustive_n + 1):
        for row in itertools.product((-1, 0, 1), repeat=n):
            c = Circulant(row)
            det = circ_det(c, table=table)
            check(is_singular(c, table=table).singular == (det == 0), f"singular <=> det 0 for {row}")
            cases += 1

    for n in range(1, bounds.unital_n + 1):
        for row in itertools.product((0, 1), repeat=n):
            c = Circulant(row)
            f = c.associated().poly
            has_factor = f.is_zero or any(poly_mod(f, cyclotomic(d, table)).is_zero for d in divisors(n))
            check(is_singular(c, table=table).singular == has_factor, f"unital singularity {row}")
            cases += 1

    for _ in range(bounds.circulant_cases):
        n = rng.randint(1, bounds.circulant_n)
        row = tuple(rng.randint(-2, 2) for _ in range(n))
        c = Circulant(row)
        det = circ_det(c, table=table)
        check(is_singular(c, table=table).singular == (det == 0), f"singular <=> det 0 for {row}")
        cases += 1
    return cases


def suite_annihilator(rng, bounds, table) -> int:
    cases = 0
    for n in range(1, bounds.annihilator_n + 1):
        projectors = projectors_for(n, table)
        delta = PeriodicSeq(n, tuple(1 if k == 0 else 0 for k in range(n)))
        check(not annihilator_system(delta).basis, f"delta sequence n={n} has a trivial nullspace")
        for s in [delta] + [random_seq(rng, n) for _ in range(bounds.annihilator_samples)]:
            system = annihilator_system(s)
            for a in system.basis:
                check(apply(RatPoly(a), s).is_zero, f"nullspace vector annihilates {s.to_text()}")
            check(
                annihilator_consistency(
                    s,
                    table=table,
                    system=system,
                    decomposition=decompose(s, projectors=projectors, table=table),
                ),
                f"dimension identity for {s.to_text()}",
            )
            cases += 1
    return cases


SUITES: List[Tuple[str, SuiteFn]] = [
    ("exactmath.divmod", suite_poly_divmod),
    ("exactmath.gcd", suite_poly_gcd),
    ("exactmath.bareiss", suite_bareiss),
    ("exactmath.nullspace", suite_nullspace),
    ("cyclotomic.golden", suite_cyclotomic_golden),
    ("cyclotomic.identities", suite_cyclotomic_identities),
    ("cyclotomic.factors", suite_cyclotomic_factors),
    ("periodic.shift_calculus", suite_shift_calculus),
    ("decompose.projectors", suite_projectors),
    ("decompose.round_trip", suite_decomposition),
    ("decompose.oracle", suite_oracle),
    ("diffeq.analysis", suite_diffeq),
    ("circulant.determinants", suite_circulant),
    ("circulant.annihilator", suite_annihilator),
]


def selfcheck(
    max_n: int,
    *,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    suites: Optional[List[Tuple[str, SuiteFn]]] = None,
) -> SelfCheckOut:
    """
    Run every suite at the scale max_n selects (24 is the full scale).
    `samples` overrides the per-n random case counts; None keeps each
    suite's own count unless settings.selfcheck_samples is set.
    """
    seed = settings.selfcheck_seed if seed is None else seed
    samples = settings.selfcheck_samples if samples is None else samples
    bounds = SuiteBounds.for_run(max_n, samples)
    table = CyclotomicTable()

    results: List[SuiteResult] = []
    for name, fn in suites if suites is not None else SUITES:
        rng = random.Random(f"{seed}:{name}")
        started = time.perf_counter()
        try:
            cases = fn(rng, bounds, table)
            results.append(SuiteResult(name=name, cases=cases, passed=True))
        except InvariantViolation as e:
            results.append(SuiteResult(name=name, cases=0, passed=False, failure=str(e)))
        except (ValueError, ArithmeticError, RuntimeError) as e:
            # ConsistencyError lands here: a cross-check inside the library fired
            results.append(
                SuiteResult(name=name, cases=0, passed=False, failure=f"{type(e).__name__}: {e}")
            )
        logger.info(
            "selfcheck %-26s %s (%.2fs)",
            name,
            "ok" if results[-1].passed else "FAILED",
            time.perf_counter() - started,
        )

    return SelfCheckOut(max_n=max_n, passed=all(r.passed for r in results), suites=results)
