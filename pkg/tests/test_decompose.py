import random
from fractions import Fraction

import numpy as np
import pytest

from cyclodecomp.cyclotomic import CyclotomicTable, cyclotomic, divisors, lcm_all
from cyclodecomp.decompose import (
    build_projectors,
    decompose,
    kernel_dimension,
    kernel_sum_check,
    minimal_annihilator,
    projectors_for,
    reconstruct,
    support,
    support_period,
    support_product,
)
from cyclodecomp.exactmath import RatPoly, poly_mod, poly_mul
from cyclodecomp.periodic import PeriodicSeq, apply, dft_group_oracle, fundamental_period, is_antiperiodic
from cyclodecomp.selfcheck import random_seq

F = Fraction


@pytest.fixture
def table():
    return CyclotomicTable()


@pytest.fixture
def rng():
    return random.Random(2024)


# -----------------------------------------------------------
# 1. Projector algebra
# -----------------------------------------------------------
def test_projector_algebra_up_to_48(table):
    for n in range(1, 49):
        projectors = build_projectors(n, table=table, verify=False)
        modulus = RatPoly.unity(n)
        total = RatPoly()
        for d in projectors.divisors:
            pi_d = projectors[d].poly
            total = total + pi_d
            assert poly_mod(poly_mul(pi_d, pi_d), modulus) == pi_d
            assert poly_mod(poly_mul(pi_d, cyclotomic(d, table)), modulus).is_zero
            for e in projectors.divisors:
                if e != d:
                    assert poly_mod(poly_mul(pi_d, projectors[e].poly), modulus).is_zero
        assert poly_mod(total, modulus) == RatPoly.one()


def test_projector_set_covers_divisors(table):
    assert build_projectors(12, table=table).divisors == [1, 2, 3, 4, 6, 12]


def test_build_projectors_rejects_nonpositive():
    with pytest.raises(ValueError):
        build_projectors(0)


def test_projectors_are_cached_per_table(table):
    assert projectors_for(10, table) is projectors_for(10, table)


# -----------------------------------------------------------
# 2. Decomposition
# -----------------------------------------------------------
def test_delta_sequence_period_4(table):
    result = decompose(PeriodicSeq.of(1, 0, 0, 0), table=table)
    assert result[1] == PeriodicSeq.of(F(1, 4), F(1, 4), F(1, 4), F(1, 4))
    assert result[2] == PeriodicSeq.of(F(1, 4), F(-1, 4), F(1, 4), F(-1, 4))
    assert result[4] == PeriodicSeq.of(F(1, 2), 0, F(-1, 2), 0)
    assert support(result) == [1, 2, 4]


def test_period_3_splits_into_mean_and_rest(table):
    result = decompose(PeriodicSeq.of(1, 2, 3), table=table)
    assert result[1] == PeriodicSeq.of(2, 2, 2)
    assert result[3] == PeriodicSeq.of(-1, 0, 1)


def test_alternating_sequence_is_pure(table):
    seq = PeriodicSeq.of(1, -1)
    result = decompose(seq, table=table)
    assert support(result) == [2]
    assert minimal_annihilator(seq, table=table) == RatPoly.of(1, 1)
    assert support_period(result) == 2


def test_zero_sequence(table):
    seq = PeriodicSeq.zeros(6)
    result = decompose(seq, table=table)
    assert support(result) == []
    assert minimal_annihilator(seq, table=table) == RatPoly.one()
    assert support_period(result) == 1


def test_round_trip_and_annihilation(table, rng):
    for n in range(1, 25):
        projectors = projectors_for(n, table)
        for _ in range(100):
            s = random_seq(rng, n)
            result = decompose(s, projectors=projectors, table=table)
            assert reconstruct(result) == s
            for d, part in result.components.items():
                assert apply(cyclotomic(d, table), part).is_zero
                if not part.is_zero:
                    assert fundamental_period(part) == d
                if d > 1 and d & (d - 1) == 0 and not part.is_zero:
                    assert is_antiperiodic(part, d // 2)
            assert fundamental_period(s) == lcm_all(support(result))


def test_minimal_annihilator_kills_sequence(table, rng):
    for n in (4, 6, 9, 12):
        s = random_seq(rng, n)
        m = support_product(decompose(s, table=table), table=table)
        assert apply(m, s).is_zero


def test_threaded_projection_matches_serial(table, rng):
    s = random_seq(rng, 24)
    assert decompose(s, table=table, workers=4) == decompose(s, table=table, workers=1)


def test_projector_period_mismatch(table):
    with pytest.raises(ValueError):
        decompose(PeriodicSeq.of(1, 2, 3), projectors=projectors_for(4, table), table=table)


def test_oracle_agreement(table, rng):
    for n in range(1, 65):
        projectors = projectors_for(n, table)
        for _ in range(20):
            s = random_seq(rng, n)
            groups = dft_group_oracle(s)
            for d, part in decompose(s, projectors=projectors, table=table).components.items():
                exact = np.array([float(v) for v in part.values])
                assert np.max(np.abs(groups[d] - exact)) <= 1e-9


# -----------------------------------------------------------
# 3. Kernel dimensions and the kernel sum
# -----------------------------------------------------------
@pytest.mark.parametrize("n, d, dim", [(12, 1, 1), (12, 4, 2), (12, 12, 4), (7, 7, 6)])
def test_kernel_dimension(n, d, dim):
    assert kernel_dimension(n, d) == dim


def test_kernel_dimension_sums_to_n():
    for n in range(1, 61):
        assert sum(kernel_dimension(n, d) for d in divisors(n)) == n


def test_kernel_dimension_needs_divisor():
    with pytest.raises(ValueError):
        kernel_dimension(12, 5)


def test_kernel_sum(table):
    assert kernel_sum_check(12, 3, 4, table=table)
    assert kernel_sum_check(6, 1, 6, table=table)
    for n in range(2, 13):
        ds = divisors(n)
        assert kernel_sum_check(n, ds[0], ds[-1], table=table)


def test_kernel_sum_argument_errors(table):
    with pytest.raises(ValueError):
        kernel_sum_check(12, 4, 4, table=table)
    with pytest.raises(ValueError):
        kernel_sum_check(12, 5, 4, table=table)
