"""The finite-dimensional space F = O~/t^b O~ in which crimps live

An element of F is a flat tuple of raw scalars; the coordinate of t^j e_alpha
sits at index alpha * b + j.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from covercrimp.arith.field import Field, Raw
from covercrimp.arith.linalg import Row
from covercrimp.arith.matrix import SeriesMatrix
from covercrimp.arith.series import TruncatedSeries
from covercrimp.cover.structure import StructureConstants, Vector
from covercrimp.errors import DimensionMismatchError

if TYPE_CHECKING:
    from covercrimp.crimp.problem import NormalizationData


class CrimpAmbient:
    """F for a normalization stored at precision b"""

    def __init__(self, normalization: NormalizationData):
        self.normalization = normalization
        self.table: StructureConstants = normalization.cover.table
        self.field: Field = self.table.field
        self.degree: int = self.table.degree
        self.b: int = self.table.base.series_precision
        self.dimension: int = self.degree * self.b

    def index(self, alpha: int, j: int) -> int:
        return alpha * self.b + j

    def check_row(self, row: Sequence[Raw]) -> None:
        if len(row) != self.dimension:
            raise DimensionMismatchError(
                f"Vector of length {len(row)} in F of dimension {self.dimension}",
                {"expected": self.dimension, "got": len(row)},
            )

    def to_series(self, row: Sequence[Raw]) -> Vector:
        b = self.b
        return tuple(
            TruncatedSeries(self.field, tuple(row[alpha * b : (alpha + 1) * b]), b)
            for alpha in range(self.degree)
        )

    def from_series(self, vector: Sequence[TruncatedSeries]) -> Row:
        out: list[Raw] = []
        for s in vector:
            out.extend(s.truncate(self.b).coefficients)
        return tuple(out)

    def lift(self, row: Sequence[Raw], precision: int) -> Vector:
        """The element of O~ whose coordinates are the polynomials of ``row``"""
        b = self.b
        return tuple(
            TruncatedSeries.from_coefficients(
                self.field, row[alpha * b : (alpha + 1) * b], precision
            )
            for alpha in range(self.degree)
        )

    def basis_row(self, alpha: int, j: int) -> Row:
        row = [self.field.zero] * self.dimension
        row[self.index(alpha, j)] = self.field.one
        return tuple(row)

    def multiply(self, u: Sequence[Raw], v: Sequence[Raw]) -> Row:
        return self.from_series(self.table.multiply(self.to_series(u), self.to_series(v)))

    def times_t(self, row: Sequence[Raw]) -> Row:
        b = self.b
        zero = self.field.zero
        out: list[Raw] = []
        for alpha in range(self.degree):
            out.append(zero)
            out.extend(row[alpha * b : (alpha + 1) * b - 1])
        return tuple(out)

    def unit_row(self) -> Row:
        return self.from_series(self.table.unit)

    def base_ring_rows(self) -> list[Row]:
        """t^j * 1 for j < b, spanning the image of k[t]/t^b"""
        rows = [self.unit_row()]
        for _ in range(1, self.b):
            rows.append(self.times_t(rows[-1]))
        return rows

    def filtration_rows(self, k: int) -> list[Row]:
        """Basis of t^k F"""
        return [self.basis_row(alpha, j) for alpha in range(self.degree) for j in range(k, self.b)]

    def linear_terms(self, row: Sequence[Raw]) -> tuple[Raw, ...]:
        return tuple(row[alpha * self.b + 1] for alpha in range(self.degree))

    def transform(self, matrix: SeriesMatrix, row: Sequence[Raw]) -> Row:
        """Image of an element of F under a base-linear map of O~"""
        return self.from_series(matrix.apply(self.to_series(row)))
