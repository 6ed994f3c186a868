from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from residual_closeness.dyadic import DyadicValue, from_histogram, half_pow

dyadics = st.builds(DyadicValue, st.integers(-(10**12), 10**12), st.integers(0, 80))


def test_canonical_form():
    v = DyadicValue(12, 3)
    assert (v.numerator, v.exponent) == (3, 1)
    assert DyadicValue(0, 9) == DyadicValue(0)
    assert DyadicValue(0, 9).exponent == 0
    assert DyadicValue(5, 0).exponent == 0


@given(dyadics)
def test_canonical_numerator_odd_or_zero(v):
    assert v.numerator % 2 == 1 or (v.numerator == 0 and v.exponent == 0) or v.exponent == 0


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()
    assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()
    assert (a * b).to_fraction() == a.to_fraction() * b.to_fraction()
    assert (a < b) == (a.to_fraction() < b.to_fraction())
    assert (a == b) == (a.to_fraction() == b.to_fraction())


@given(dyadics)
def test_decimal_is_exact(v):
    assert Fraction(v.decimal()) == v.to_fraction()


@pytest.mark.parametrize(
    "value, text",
    [
        (DyadicValue(17, 2), "4.25"),
        (DyadicValue(-3, 2), "-0.75"),
        (DyadicValue(1, 5), "0.03125"),
        (DyadicValue(12), "12"),
        (DyadicValue(0), "0"),
    ],
)
def test_decimal_rendering(value, text):
    assert value.decimal() == text


def test_int_interop_and_coerce():
    assert 4 - DyadicValue(1, 2) == DyadicValue(15, 2)
    assert 3 * half_pow(2) == DyadicValue(3, 2)
    assert DyadicValue.coerce(Fraction(5, 8)) == DyadicValue(5, 3)
    with pytest.raises(ValueError):
        DyadicValue.coerce(Fraction(1, 3))
    assert float(DyadicValue(3, 2)) == 0.75
    assert DyadicValue(1, 1) == Fraction(1, 2)
    assert hash(DyadicValue(2, 1)) == hash(DyadicValue(1))


def test_from_histogram():
    assert from_histogram({1: 2}) == 1
    assert from_histogram({1: 6, 2: 6}) == DyadicValue(9, 1)
    assert from_histogram({}) == 0
    assert from_histogram({3: 0, 1: 0}) == 0
