from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lvreal import Dyadic, dyadic_round, parse_dyadic
from lvreal.exact import sqrt_bounds


def test_normalization_removes_trailing_zero_bits():
    assert Dyadic(6, 3) == Dyadic(3, 2)
    assert Dyadic(0, 17) == Dyadic(0, 0)
    assert Dyadic(4, 0) == Dyadic(1, -2)


def test_value_equality_is_field_equality():
    a = Dyadic(12, 5)
    assert (a.mantissa, a.exponent) == (3, 3)


def test_arithmetic_examples():
    half = Dyadic(1, 1)
    quarter = Dyadic(1, 2)
    assert half + quarter == Dyadic(3, 2)
    assert half - quarter == quarter
    assert half * quarter == Dyadic(1, 3)
    assert -half < quarter < half


def test_serialization_round_trip():
    for d in (Dyadic(3, 5), Dyadic(-7, 2), Dyadic(0), Dyadic(5, -3)):
        assert parse_dyadic(str(d)) == d
    assert str(Dyadic(3, 3)) == "3*2^-3"
    assert str(Dyadic(8)) == "1*2^3"


def test_from_fraction_rejects_non_dyadic():
    assert Dyadic.from_fraction(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 3))


dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(-30, 30))


@given(dyadics, dyadics)
def test_add_matches_fractions(a, b):
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()


@given(dyadics, dyadics)
def test_mul_matches_fractions(a, b):
    assert (a * b).to_fraction() == a.to_fraction() * b.to_fraction()


@given(dyadics, dyadics)
def test_order_matches_fractions(a, b):
    assert (a < b) == (a.to_fraction() < b.to_fraction())


@given(st.fractions(min_value=-2, max_value=2), st.integers(0, 40))
def test_dyadic_round_error_bound(q, bits):
    d = dyadic_round(q, bits)
    assert abs(d.to_fraction() - q) <= Fraction(1, 2 ** (bits + 1))


@given(st.fractions(min_value=0, max_value=100))
def test_sqrt_bounds_bracket(q):
    lo, hi = sqrt_bounds(q)
    assert lo * lo <= q <= hi * hi
    assert hi - lo <= Fraction(1, 2**40)
