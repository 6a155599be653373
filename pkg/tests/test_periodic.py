import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from cyclodecomp.exactmath import RatPoly
from cyclodecomp.periodic import (
    PeriodicSeq,
    ShiftPoly,
    apply,
    dft_group_oracle,
    frequency_bins,
    fundamental_period,
    halving_chain,
    halving_split,
    is_antiperiodic,
    redeclare,
    shift,
)
from cyclodecomp.selfcheck import random_poly, random_seq

F = Fraction

sequences = st.lists(
    st.fractions(min_value=-10, max_value=10, max_denominator=6), min_size=1, max_size=12
).map(PeriodicSeq.from_values)


@pytest.fixture
def rng():
    return random.Random(7)


# -----------------------------------------------------------
# 1. PeriodicSeq basics
# -----------------------------------------------------------
def test_grid_evaluation_wraps():
    y = PeriodicSeq.of(1, 2, 3)
    assert y(0) == 1
    assert y(4) == 2
    assert y(-1) == 3


def test_declared_period_must_match_values():
    with pytest.raises(ValueError):
        PeriodicSeq(3, (1, 2))
    with pytest.raises(ValueError):
        PeriodicSeq(0, ())


def test_arithmetic_needs_matching_periods():
    with pytest.raises(ValueError):
        PeriodicSeq.of(1, 2) + PeriodicSeq.of(1, 2, 3)


def test_redeclare_tiles_values():
    assert redeclare(PeriodicSeq.of(1, 2), 6) == PeriodicSeq.of(1, 2, 1, 2, 1, 2)
    with pytest.raises(ValueError):
        redeclare(PeriodicSeq.of(1, 2), 3)


# -----------------------------------------------------------
# 2. Shift operator
# -----------------------------------------------------------
def test_shift_examples():
    y = PeriodicSeq.of(1, 2, 3)
    assert shift(y, 1) == PeriodicSeq.of(2, 3, 1)
    assert shift(y, -1) == PeriodicSeq.of(3, 1, 2)
    assert shift(y, 3) == y


def test_forward_difference():
    assert apply(ShiftPoly.of(-1, 1), PeriodicSeq.of(1, 2, 3)) == PeriodicSeq.of(1, 1, -2)


def test_apply_accepts_bare_polynomial():
    y = PeriodicSeq.of(1, -1)
    assert apply(RatPoly.of(1, 1), y).is_zero
    assert ShiftPoly.of(1, 1)(y).is_zero


def test_exponents_fold_modulo_period():
    y = PeriodicSeq.of(F(1, 2), 3, -1)
    assert apply(RatPoly.monomial(7), y) == shift(y, 7)


def test_unity_annihilates_every_period_n_sequence(rng):
    for n in range(1, 13):
        assert apply(RatPoly.unity(n), random_seq(rng, n)).is_zero


def test_operator_algebra(rng):
    for n in range(1, 10):
        s = random_seq(rng, n)
        p, q = ShiftPoly(random_poly(rng, 4)), ShiftPoly(random_poly(rng, 4))
        assert apply(p + q, s) == apply(p, s) + apply(q, s)
        assert apply(p * q, s) == apply(p, apply(q, s))


@hyp_settings(max_examples=50, deadline=None)
@given(seq=sequences, a=st.integers(-30, 30), b=st.integers(-30, 30))
def test_shift_composition(seq, a, b):
    assert shift(shift(seq, a), b) == shift(seq, a + b)


# -----------------------------------------------------------
# 3. Periods and antiperiods
# -----------------------------------------------------------
@pytest.mark.parametrize(
    "values, period",
    [((1, 2, 1, 2), 2), ((5, 5, 5), 1), ((0, 0), 1), ((1, 0, 0, 1, 0, 0), 3), ((1, 2, 3), 3)],
)
def test_fundamental_period(values, period):
    assert fundamental_period(PeriodicSeq.from_values(values)) == period


def test_antiperiodic():
    assert is_antiperiodic(PeriodicSeq.of(1, -1), 1)
    assert is_antiperiodic(PeriodicSeq.of(1, 0, -1, 0), 2)
    assert not is_antiperiodic(PeriodicSeq.of(1, 0, 1, 0), 2)


def test_antiperiod_must_fit_declared_period():
    with pytest.raises(ValueError):
        is_antiperiodic(PeriodicSeq.of(1, 2, 3), 1)


# -----------------------------------------------------------
# 4. Halving split and chain
# -----------------------------------------------------------
def test_halving_split_example():
    g, h = halving_split(PeriodicSeq.of(1, 0, 0, 0))
    assert g == PeriodicSeq.of(F(1, 2), 0, F(1, 2), 0)
    assert h == PeriodicSeq.of(F(1, 2), 0, F(-1, 2), 0)


def test_halving_split_odd_period():
    with pytest.raises(ValueError):
        halving_split(PeriodicSeq.of(1, 2, 3))


def test_halving_split_properties(rng):
    for n in range(2, 25, 2):
        s = random_seq(rng, n)
        g, h = halving_split(s)
        assert g + h == s
        assert shift(g, n // 2) == g
        assert is_antiperiodic(h, n // 2)


def test_halving_chain_example():
    parts, remainder = halving_chain(PeriodicSeq.of(1, 0, 0, 0))
    assert parts == {
        2: PeriodicSeq.of(F(1, 2), 0, F(-1, 2), 0),
        1: PeriodicSeq.of(F(1, 4), F(-1, 4), F(1, 4), F(-1, 4)),
    }
    assert remainder == PeriodicSeq.of(F(1, 4), F(1, 4), F(1, 4), F(1, 4))


def test_halving_chain_sums_back(rng):
    for n in (1, 3, 6, 8, 12, 24):
        s = random_seq(rng, n)
        parts, remainder = halving_chain(s)
        total = remainder
        for q, part in parts.items():
            assert is_antiperiodic(part, q)
            total = total + part
        assert total == s
        m = n
        while m % 2 == 0:
            m //= 2
        assert shift(remainder, m) == remainder


# -----------------------------------------------------------
# 5. Frequency bins and the DFT oracle
# -----------------------------------------------------------
def test_frequency_bin_orders():
    assert [b.order for b in frequency_bins(4)] == [1, 4, 2, 4]
    assert [b.order for b in frequency_bins(6)] == [1, 6, 3, 2, 3, 6]


def test_oracle_groups_sum_to_input(rng):
    for n in (1, 5, 12):
        s = random_seq(rng, n)
        groups = dft_group_oracle(s)
        total = sum(groups.values())
        assert np.allclose(total, [float(v) for v in s.values], atol=1e-9)


def test_oracle_delta_sequence():
    groups = dft_group_oracle(PeriodicSeq.of(1, 0, 0, 0))
    assert sorted(groups) == [1, 2, 4]
    assert np.allclose(groups[1], [0.25] * 4)
    assert np.allclose(groups[2], [0.25, -0.25, 0.25, -0.25])
    assert np.allclose(groups[4], [0.5, 0, -0.5, 0])
