import random
from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from cyclodecomp.exactmath import (
    ConsistencyError,
    RatMatrix,
    RatPoly,
    bareiss_det,
    format_rational,
    nullspace,
    parse_rational,
    poly_divmod,
    poly_exact_div,
    poly_gcd,
    poly_mod,
    poly_resultant,
    poly_xgcd,
    rank,
    squarefree_part,
)
from cyclodecomp.selfcheck import cofactor_det, random_poly

small_ints = st.integers(min_value=-5, max_value=5)
polys = st.lists(small_ints, min_size=1, max_size=9).map(lambda cs: RatPoly(tuple(cs)))
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@pytest.fixture
def rng():
    return random.Random(1234)


# -----------------------------------------------------------
# 1. Rational text format
# -----------------------------------------------------------
@pytest.mark.parametrize(
    "text, expected",
    [("0", Fraction(0)), ("-3/4", Fraction(-3, 4)), ("+6/8", Fraction(3, 4)), ("12", Fraction(12))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "1/-2", "a", "1//2", "pi"])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_rational_text_round_trip():
    for q in [Fraction(0), Fraction(-7, 3), Fraction(10**30 + 1, 7), Fraction(5)]:
        assert parse_rational(format_rational(q)) == q


def test_floats_are_rejected():
    with pytest.raises(ValueError):
        RatPoly((0.5, 1))


# -----------------------------------------------------------
# 2. Ring arithmetic
# -----------------------------------------------------------
def test_difference_of_squares():
    assert RatPoly.of(-1, 1) * RatPoly.of(1, 1) == RatPoly.of(-1, 0, 1)


def test_additive_inverse_is_zero_polynomial():
    total = RatPoly.of(1, 1) + RatPoly.of(-1, -1)
    assert total.is_zero
    assert total.degree == -1
    assert total.coeffs == ()


def test_phi2_times_phi3():
    assert RatPoly.of(1, 1) * RatPoly.of(1, 1, 1) == RatPoly.parse("1,2,2,1")


def test_normalization_strips_leading_zeros():
    p = RatPoly.of(1, 2, 0, 0)
    assert p.degree == 1
    assert p.leading == 2


def test_pretty_print():
    assert str(RatPoly.of(1, 0, -1, 0, 1)) == "x^4 - x^2 + 1"
    assert str(RatPoly.of(-1, 1)) == "x - 1"


# -----------------------------------------------------------
# 3. Division
# -----------------------------------------------------------
def test_divmod_exact():
    q, r = poly_divmod(RatPoly.of(-1, 0, 1), RatPoly.of(-1, 1))
    assert q == RatPoly.of(1, 1)
    assert r.is_zero


def test_divmod_with_remainder():
    q, r = poly_divmod(RatPoly.of(1, 0, 1), RatPoly.of(1, 1))
    assert q == RatPoly.of(-1, 1)
    assert r == RatPoly.of(2)


def test_divmod_x12_minus_1_by_phi12():
    phi12 = RatPoly.of(1, 0, -1, 0, 1)
    q, r = poly_divmod(RatPoly.unity(12), phi12)
    expected = (
        RatPoly.of(-1, 1) * RatPoly.of(1, 1) * RatPoly.of(1, 1, 1) * RatPoly.of(1, 0, 1) * RatPoly.of(1, -1, 1)
    )
    assert r.is_zero
    assert q == expected


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(RatPoly.of(1, 1), RatPoly.zero())


def test_exact_division_failure_is_internal_error():
    with pytest.raises(ConsistencyError):
        poly_exact_div(RatPoly.of(1, 0, 1), RatPoly.of(1, 1))


def test_divmod_reconstruction_random(rng):
    for _ in range(200):
        a, b = random_poly(rng), random_poly(rng)
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


@hyp_settings(max_examples=60, deadline=None)
@given(a=polys, b=nonzero_polys)
def test_divmod_reconstruction_property(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


# -----------------------------------------------------------
# 4. gcd / xgcd
# -----------------------------------------------------------
def test_gcd_shared_factor():
    assert poly_gcd(RatPoly.of(-1, 0, 1), RatPoly.of(0, 1, 1)) == RatPoly.of(1, 1)


def test_gcd_of_distinct_cyclotomics_is_one():
    assert poly_gcd(RatPoly.of(1, 1), RatPoly.of(1, 1, 1)) == RatPoly.one()


def test_gcd_with_x6_minus_1():
    p = RatPoly.parse("1,2,2,1")
    assert poly_gcd(p, RatPoly.unity(6)) == p
    assert poly_mod(RatPoly.unity(6), p).is_zero


def test_gcd_both_zero_is_an_error():
    with pytest.raises(ValueError):
        poly_gcd(RatPoly.zero(), RatPoly.zero())
    with pytest.raises(ValueError):
        poly_xgcd(RatPoly.zero(), RatPoly.zero())


def test_xgcd_coprime_linears():
    a, b = RatPoly.of(1, 1), RatPoly.of(-1, 1)
    g, u, v = poly_xgcd(a, b)
    assert g == RatPoly.one()
    assert u * a + v * b == RatPoly.one()
    assert (u, v) == (RatPoly.of(Fraction(1, 2)), RatPoly.of(Fraction(-1, 2)))


def test_xgcd_phi3_and_phi1():
    a, b = RatPoly.of(1, 1, 1), RatPoly.of(-1, 1)
    g, u, v = poly_xgcd(a, b)
    assert g == RatPoly.one()
    assert u * a + v * b == g


def test_xgcd_equal_inputs():
    a = RatPoly.of(1, 1)
    assert poly_xgcd(a, a) == (a, RatPoly.one(), RatPoly.zero())


def test_xgcd_identity_random(rng):
    for _ in range(200):
        common = random_poly(rng, max_degree=2)
        a, b = random_poly(rng, 5) * common, random_poly(rng, 5) * common
        g, u, v = poly_xgcd(a, b)
        assert u * a + v * b == g
        assert g.is_monic
        assert poly_mod(a, g).is_zero and poly_mod(b, g).is_zero


def test_derivative():
    assert RatPoly.of(1, 2, 3).derivative() == RatPoly.of(2, 6)
    assert RatPoly.of(5).derivative().is_zero


def test_squarefree_part_drops_multiplicities():
    base = RatPoly.of(1, Fraction(-3, 2), 1)
    assert squarefree_part(base ** 3) == base
    assert squarefree_part(RatPoly.of(-1, 1) ** 2 * RatPoly.of(2, 2)) == RatPoly.of(-1, 0, 1)
    assert squarefree_part(RatPoly.of(7)) == RatPoly.one()


def test_squarefree_part_of_zero():
    with pytest.raises(ValueError):
        squarefree_part(RatPoly.zero())


# -----------------------------------------------------------
# 5. Resultant and determinants
# -----------------------------------------------------------
def test_resultant_examples():
    assert poly_resultant(RatPoly.of(-1, 1), RatPoly.of(1, 1)) == 2
    assert poly_resultant(RatPoly.of(-1, 0, 1), RatPoly.of(0, 1)) == -1
    assert poly_resultant(RatPoly.of(-1, 1), RatPoly.of(-1, 1)) == 0


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        poly_resultant(RatPoly.zero(), RatPoly.of(1, 1))


def test_bareiss_examples():
    assert bareiss_det(RatMatrix.identity(3)) == 1
    assert bareiss_det(RatMatrix.from_rows([[-1, 1], [1, -1]])) == 0
    assert bareiss_det(RatMatrix.from_rows([[2, 1], [1, 2]])) == 3


def test_bareiss_with_fractions_and_pivoting():
    m = RatMatrix.from_rows([[0, Fraction(1, 2)], [Fraction(1, 3), 1]])
    assert bareiss_det(m) == Fraction(-1, 6)


def test_bareiss_non_square():
    with pytest.raises(ValueError):
        bareiss_det(RatMatrix.from_rows([[1, 2, 3]]))


def test_bareiss_matches_cofactor_expansion(rng):
    for _ in range(500):
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        assert bareiss_det(RatMatrix.from_rows(rows)) == cofactor_det(rows)


# -----------------------------------------------------------
# 6. Nullspace
# -----------------------------------------------------------
def test_nullspace_examples():
    assert nullspace(RatMatrix.identity(2)) == []
    assert nullspace(RatMatrix.from_rows([[1, -1], [-1, 1]])) == [(1, 1)]
    assert nullspace(RatMatrix.from_rows([[1, 1], [1, 1]])) == [(1, -1)]


def test_nullspace_dimension_random(rng):
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = RatMatrix.from_rows([[rng.randint(-1, 1) for _ in range(c)] for _ in range(r)])
        basis = nullspace(m)
        assert len(basis) == c - rank(m)
        for v in basis:
            assert not any(m.matvec(v))


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, (1, 2, 3))
