"""Tests for truncated power series"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from covercrimp.arith.field import Field
from covercrimp.arith.series import AtLeast, TruncatedSeries, series_mul, series_valuation
from covercrimp.errors import (
    DomainError,
    FieldMismatchError,
    NotInvertibleError,
    PrecisionExhaustedError,
)
from tests.helpers.covers import series

F7 = Field.finite(7)


@pytest.mark.lightweight
class TestConstruction:
    def test_pads_and_truncates(self, f7):
        assert series(f7, [1, 2], 4).coefficients == (1, 2, 0, 0)
        assert series(f7, [1, 2, 3, 4, 5], 3).coefficients == (1, 2, 3)

    def test_stored_length_must_match(self, f7):
        with pytest.raises(DomainError):
            TruncatedSeries(f7, (1, 2), 3)

    def test_positive_precision(self, f7):
        with pytest.raises(DomainError):
            TruncatedSeries.zero(f7, 0)

    def test_monomial_beyond_precision_is_zero(self, f7):
        assert TruncatedSeries.monomial(f7, 3, 5, 4).is_zero()

    def test_str(self, f7):
        assert str(series(f7, [1, 2, 1], 3)) == "1 + 2*t + t^2 + O(t^3)"
        assert str(TruncatedSeries.zero(f7, 2)) == "0 + O(t^2)"


@pytest.mark.lightweight
class TestValuation:
    def test_first_nonzero_coefficient(self, f7):
        assert series(f7, [0, 0, 3], 5).valuation() == 2

    def test_zero_to_precision(self, f7):
        assert series(f7, [0, 7, 14], 3).valuation() == AtLeast(3)

    def test_exact_valuation_fails_loudly(self, f7):
        with pytest.raises(PrecisionExhaustedError):
            TruncatedSeries.zero(f7, 4).exact_valuation()

    def test_coefficient_past_precision(self, f7):
        with pytest.raises(PrecisionExhaustedError):
            series(f7, [1], 3).coefficient(3)


@pytest.mark.lightweight
class TestArithmetic:
    def test_product_keeps_smaller_precision(self, qq):
        a = series(qq, [1, 1], 5)
        b = series(qq, [1, -1], 3)
        product = a * b
        assert product.precision == 3
        assert product.coefficients == (1, 0, -1)

    def test_free_functions_match_operators(self, qq):
        a = series(qq, [1, 1], 5)
        b = series(qq, [1, -1], 3)
        assert series_mul(a, b) == a * b
        assert series_valuation(series(qq, [0, 0, Fraction(1, 2)], 4)) == 2
        assert series_valuation(TruncatedSeries.zero(qq, 4)) == AtLeast(4)

    def test_sum_keeps_smaller_precision(self, qq):
        assert (series(qq, [1], 5) + series(qq, [0, 1], 2)).precision == 2

    def test_geometric_series(self, qq):
        inverse = series(qq, [1, -1], 6).inverse()
        assert inverse.coefficients == (1,) * 6

    def test_non_unit_has_no_inverse(self, f7):
        with pytest.raises(NotInvertibleError):
            series(f7, [0, 1], 4).inverse()

    def test_scalar_promotion(self, f7):
        s = series(f7, [1, 2], 3)
        assert (s + 1).coefficients == (2, 2, 0)
        assert (3 * s).coefficients == (3, 6, 0)
        assert (1 - s).coefficients == (0, 5, 0)

    def test_shift(self, f7):
        s = series(f7, [1, 2, 3], 3)
        assert s.shift(1).coefficients == (0, 1, 2)
        assert s.shift(4).is_zero()

    def test_shift_down_loses_precision(self, f7):
        s = series(f7, [0, 0, 1, 2], 4)
        down = s.shift_down(2)
        assert down.precision == 2
        assert down.coefficients == (1, 2)

    def test_shift_down_requires_divisibility(self, f7):
        with pytest.raises(NotInvertibleError):
            series(f7, [0, 1], 4).shift_down(2)

    def test_divide_exact(self, qq):
        numerator = series(qq, [0, 0, 1, 1], 6)
        denominator = series(qq, [0, 1, 1], 6)
        quotient = numerator.divide_exact(denominator)
        assert quotient.precision == 5
        assert quotient.coefficients == (0, 1, 0, 0, 0)

    def test_divide_exact_refuses_non_multiple(self, qq):
        with pytest.raises(NotInvertibleError):
            series(qq, [0, 1], 6).divide_exact(series(qq, [0, 0, 1], 6))

    def test_power(self, qq):
        assert series(qq, [1, 1], 4).power(3).coefficients == (1, 3, 3, 1)

    def test_truncate_cannot_raise_precision(self, f7):
        with pytest.raises(PrecisionExhaustedError):
            series(f7, [1], 3).truncate(4)

    def test_field_mismatch(self, f5, f7):
        with pytest.raises(FieldMismatchError):
            series(f5, [1], 3) + series(f7, [1], 3)
        with pytest.raises(FieldMismatchError):
            series(f5, [1], 3) * series(f7, [1], 3)

    def test_rational_coefficients(self, qq):
        s = series(qq, ["1/2", 3], 2)
        assert s.coefficients == (Fraction(1, 2), Fraction(3))


unit_series = st.lists(st.integers(min_value=0, max_value=6), min_size=8, max_size=8).filter(
    lambda c: c[0] != 0
)
any_series = st.lists(st.integers(min_value=0, max_value=6), min_size=8, max_size=8)


@given(unit_series)
def test_inverse_is_two_sided(coefficients):
    s = TruncatedSeries.from_coefficients(F7, coefficients, 8)
    one = TruncatedSeries.one(F7, 8)
    assert s * s.inverse() == one
    assert s.inverse() * s == one


@given(any_series, any_series, any_series)
def test_ring_axioms(a, b, c):
    x, y, z = (TruncatedSeries.from_coefficients(F7, v, 8) for v in (a, b, c))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(any_series, any_series)
def test_valuation_of_product(a, b):
    x, y = (TruncatedSeries.from_coefficients(F7, v, 8) for v in (a, b))
    vx, vy, vxy = x.valuation(), y.valuation(), (x * y).valuation()
    if isinstance(vx, int) and isinstance(vy, int) and vx + vy < 8:
        assert vxy == vx + vy
    else:
        assert isinstance(vxy, AtLeast)
