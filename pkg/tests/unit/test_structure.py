"""Tests for structure-constant tables and their validation"""

import pytest

from covercrimp.cover.structure import BaseRing, StructureConstants, validate_algebra
from covercrimp.errors import DimensionMismatchError, FieldMismatchError
from tests.helpers.covers import polynomial_cover, series


def _table(field, degree, products, unit=None, precision=2):
    """Table with e0 as unit unless given; ``products[(i, j)]`` lists e_i e_j in coordinates"""
    base = BaseRing(field, precision)
    zero = [0] * degree
    constants = []
    for i in range(degree):
        row = []
        for j in range(degree):
            if (i, j) in products:
                row.append(products[(i, j)])
            elif i == 0:
                row.append([1 if k == j else 0 for k in range(degree)])
            elif j == 0:
                row.append([1 if k == i else 0 for k in range(degree)])
            else:
                row.append(zero)
        constants.append(row)
    unit = unit or [1] + [0] * (degree - 1)
    return StructureConstants.from_literals(base, unit, constants)


@pytest.mark.lightweight
class TestBaseRing:
    def test_field_base(self, f7):
        base = BaseRing(f7)
        assert base.is_field
        assert base.series_precision == 1
        assert base.element(9).coefficients == (2,)

    def test_series_base(self, f7):
        base = BaseRing(f7, 4)
        assert not base.is_field
        assert base.element([0, 1]).coefficients == (0, 1, 0, 0)
        assert base.descriptor() == {"field": {"Fq": 7}, "precision": 4}


@pytest.mark.lightweight
class TestStructureConstants:
    def test_shape_is_checked(self, qq):
        base = BaseRing(qq, 2)
        with pytest.raises(DimensionMismatchError):
            StructureConstants.from_literals(base, [1, 0], [[[1, 0]]])

    def test_entries_share_the_field(self, qq, f7):
        base = BaseRing(qq, 2)
        with pytest.raises(FieldMismatchError):
            StructureConstants(1, base, (series(f7, [1], 2),), (((series(qq, [1], 2),),),))

    def test_traces_of_polynomial_algebra(self, qq):
        # x^2 + 2x + t has roots summing to -2
        cover = polynomial_cover(qq, [[0, 1], [2], [1]], 4)
        traces = cover.table.traces()
        assert traces[0].coefficients == (2, 0, 0, 0)
        assert traces[1].coefficients == (-2, 0, 0, 0)

    def test_multiply_in_power_basis(self, qq):
        # x * x = -t - 2x in R[x]/(x^2 + 2x + t)
        cover = polynomial_cover(qq, [[0, 1], [2], [1]], 3)
        table = cover.table
        product = table.multiply(table.basis_vector(1), table.basis_vector(1))
        assert product[0].coefficients == (0, -1, 0)
        assert product[1].coefficients == (-2, 0, 0)

    def test_with_precision(self, qq):
        table = polynomial_cover(qq, [[0, 1], [0], [1]], 6).table
        lower = table.with_precision(3)
        assert lower.base.precision == 3
        assert lower.unit[0].precision == 3


@pytest.mark.lightweight
class TestValidateAlgebra:
    def test_polynomial_algebra_is_valid(self, f7):
        cover = polynomial_cover(f7, [[0, 1], [0, 0, 3], [2], [1]], 5)
        report = validate_algebra(cover.table)
        assert report.valid
        assert report.to_dict() == {"valid": True, "violations": []}

    def test_commutativity_violation(self, qq):
        table = _table(qq, 2, {(1, 1): [0, 1]})
        broken = _table(qq, 3, {(1, 2): [0, 1, 0], (2, 1): [0, 0, 1]})
        assert validate_algebra(table).valid
        kinds = {v.kind for v in validate_algebra(broken).violations}
        assert "commutativity" in kinds

    def test_associativity_violation(self, qq):
        # x^2 = y, y^2 = x, xy = 0: (xx)y = x but x(xy) = 0
        table = _table(qq, 3, {(1, 1): [0, 0, 1], (2, 2): [0, 1, 0]})
        report = validate_algebra(table)
        assert not report.valid
        assert {v.kind for v in report.violations} == {"associativity"}

    def test_unit_violation(self, qq):
        table = _table(qq, 2, {(1, 1): [0, 1]}, unit=[1, 1])
        report = validate_algebra(table)
        assert [v.kind for v in report.violations if v.kind == "unit"]
        assert report.to_dict()["valid"] is False

    def test_every_violation_is_reported(self, qq):
        table = _table(qq, 3, {(1, 1): [0, 0, 1], (2, 2): [0, 1, 0], (1, 2): [0, 1, 0]})
        report = validate_algebra(table)
        assert {v.kind for v in report.violations} == {"commutativity", "associativity"}
