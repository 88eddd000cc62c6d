"""Tests for series matrices and dense linear algebra over a field"""

import itertools
from fractions import Fraction

import pytest

from covercrimp.arith.field import Field
from covercrimp.arith.linalg import (
    canonical_basis,
    extend_to_basis,
    gaussian_binomial,
    in_span,
    iter_rref_with_pivots,
    kernel,
    rank,
    rref,
)
from covercrimp.arith.matrix import SeriesMatrix, series_det
from covercrimp.errors import DimensionMismatchError, NotInvertibleError
from tests.helpers.covers import series


@pytest.mark.lightweight
class TestSeriesMatrix:
    def test_determinant_two_by_two(self, qq):
        m = SeriesMatrix.from_literals(qq, [[[1], [0, 1]], [[0, 1], [1]]], 5)
        assert series_det(m).coefficients == (1, 0, -1, 0, 0)

    def test_determinant_of_scalars(self, qq):
        m = SeriesMatrix.from_literals(
            qq, [[[2], [0], [1]], [[1], [3], [2]], [[1], [1], [2]]], 2
        )
        assert series_det(m).coefficients == (6, 0)

    def test_determinant_of_blocks_multiplies(self, qq):
        a = SeriesMatrix.from_literals(qq, [[[1, 1]]], 4)
        b = SeriesMatrix.from_literals(qq, [[[0, 1], [1]], [[1], [2]]], 4)
        full = SeriesMatrix.from_literals(
            qq, [[[1, 1], [0], [0]], [[0], [0, 1], [1]], [[0], [1], [2]]], 4
        )
        product = series_det(a) * series_det(b)
        assert series_det(full).coefficients == product.coefficients == (-1, 1, 2, 0)

    def test_determinant_needs_square(self, qq):
        m = SeriesMatrix.from_literals(qq, [[[1], [2]]], 2)
        with pytest.raises(DimensionMismatchError):
            series_det(m)

    def test_inverse(self, f7):
        m = SeriesMatrix.from_literals(f7, [[[1, 1], [0, 2]], [[3], [1, 0, 1]]], 6)
        identity = SeriesMatrix.identity(f7, 2, 6)
        assert m @ m.inverse() == identity
        assert m.inverse() @ m == identity

    def test_inverse_needs_unit_determinant(self, qq):
        m = SeriesMatrix.from_literals(qq, [[[0, 1], [0]], [[0], [1]]], 4)
        with pytest.raises(NotInvertibleError):
            m.inverse()

    def test_from_rows_truncates_to_common_precision(self, qq):
        m = SeriesMatrix.from_rows([[series(qq, [1], 5), series(qq, [1], 3)]])
        assert m.precision == 3

    def test_mixed_precision_is_refused(self, qq):
        with pytest.raises(DimensionMismatchError):
            SeriesMatrix(1, 2, ((series(qq, [1], 5), series(qq, [1], 3)),))

    def test_product_shape_mismatch(self, qq):
        a = SeriesMatrix.identity(qq, 2, 3)
        b = SeriesMatrix.identity(qq, 3, 3)
        with pytest.raises(DimensionMismatchError):
            a @ b


@pytest.mark.lightweight
class TestFieldLinearAlgebra:
    def test_rref_and_rank(self, f7):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        reduced, pivots = rref(f7, rows)
        assert pivots == [0, 1]
        assert reduced == [[1, 0, 1], [0, 1, 1]]
        assert rank(f7, rows) == 2

    def test_kernel(self, qq):
        rows = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
        basis = kernel(qq, rows, 3)
        assert basis == [[1, -1, 1]]

    def test_canonical_basis_ignores_spanning_set(self, f7):
        first = canonical_basis(f7, [[1, 1, 0], [0, 1, 1]])
        second = canonical_basis(f7, [[1, 2, 1], [1, 0, 6]])
        assert first == second

    def test_in_span(self, f7):
        basis, pivots = rref(f7, [[1, 0, 2], [0, 1, 3]])
        assert in_span(f7, [2, 3, 6], basis, pivots)
        assert not in_span(f7, [0, 0, 1], basis, pivots)

    def test_extend_to_basis(self, f7):
        chosen = extend_to_basis(f7, [[1, 0, 0]], [[2, 0, 0], [1, 1, 0], [0, 3, 0], [0, 0, 1]])
        assert chosen == [[1, 1, 0], [0, 0, 1]]

    @pytest.mark.parametrize(
        "n, k, q, expected",
        [(2, 1, 3, 4), (4, 2, 2, 35), (6, 3, 3, 33880), (3, 0, 5, 1), (3, 4, 5, 0)],
    )
    def test_gaussian_binomial(self, n, k, q, expected):
        assert gaussian_binomial(n, k, q) == expected

    @pytest.mark.parametrize("n, k, q", [(4, 2, 2), (3, 1, 3), (3, 2, 3)])
    def test_rref_matrices_name_every_subspace(self, n, k, q):
        field = Field.finite(q)
        matrices = [
            m
            for pivots in itertools.combinations(range(n), k)
            for m in iter_rref_with_pivots(field, pivots, n)
        ]
        assert len(matrices) == gaussian_binomial(n, k, q)
        assert len({canonical_basis(field, m) for m in matrices}) == len(matrices)
