"""Matrices with truncated-series entries"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from covercrimp.arith.field import Field
from covercrimp.arith.series import TruncatedSeries, series_mul
from covercrimp.errors import DimensionMismatchError, FieldMismatchError, NotInvertibleError

Vector = tuple[TruncatedSeries, ...]


@dataclass(frozen=True)
class SeriesMatrix:
    """A rows x cols matrix over k[t]/t^N; all entries share one field and one precision"""

    rows: int
    cols: int
    entries: tuple[tuple[TruncatedSeries, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(f"Entries do not form a {self.rows}x{self.cols} matrix")
        if self.rows and self.cols:
            first = self.entries[0][0]
            for row in self.entries:
                for e in row:
                    if e.field != first.field:
                        raise FieldMismatchError("Matrix entries live over different fields")
                    if e.precision != first.precision:
                        raise DimensionMismatchError("Matrix entries carry different precisions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[TruncatedSeries]]) -> SeriesMatrix:
        """Build from rows, truncating every entry to the smallest precision present"""
        n = min(e.precision for row in rows for e in row)
        entries = tuple(tuple(e.truncate(n) for e in row) for row in rows)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def from_literals(
        cls, field: Field, rows: Sequence[Sequence[Sequence[Any]]], precision: int
    ) -> SeriesMatrix:
        """Build from nested coefficient lists"""
        return cls.from_rows(
            [[TruncatedSeries.from_coefficients(field, e, precision) for e in row] for row in rows]
        )

    @classmethod
    def identity(cls, field: Field, n: int, precision: int) -> SeriesMatrix:
        zero = TruncatedSeries.zero(field, precision)
        one = TruncatedSeries.one(field, precision)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def field(self) -> Field:
        return self.entries[0][0].field

    @property
    def precision(self) -> int:
        return self.entries[0][0].precision

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> TruncatedSeries:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> SeriesMatrix:
        return SeriesMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other: SeriesMatrix) -> SeriesMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n = min(self.precision, other.precision)
        zero = TruncatedSeries.zero(self.field, n)
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + series_mul(self.entries[i][k], other.entries[k][j])
                row.append(acc)
            rows.append(tuple(row))
        return SeriesMatrix(self.rows, other.cols, tuple(rows))

    def apply(self, vector: Sequence[TruncatedSeries]) -> Vector:
        """Matrix times column vector"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for {self.cols} columns")
        n = min([self.precision] + [v.precision for v in vector])
        zero = TruncatedSeries.zero(self.field, n)
        out = []
        for i in range(self.rows):
            acc = zero
            for k in range(self.cols):
                acc = acc + series_mul(self.entries[i][k], vector[k])
            out.append(acc)
        return tuple(out)

    def minor(self, skip_row: int, skip_col: int) -> SeriesMatrix:
        return SeriesMatrix(
            self.rows - 1,
            self.cols - 1,
            tuple(
                tuple(e for j, e in enumerate(row) if j != skip_col)
                for i, row in enumerate(self.entries)
                if i != skip_row
            ),
        )

    def adjugate(self) -> SeriesMatrix:
        n = self.rows
        if n == 1:
            return SeriesMatrix.identity(self.field, 1, self.precision)
        cof = [
            [
                series_det(self.minor(i, j)) if (i + j) % 2 == 0 else -series_det(self.minor(i, j))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return SeriesMatrix(n, n, tuple(tuple(cof[j][i] for j in range(n)) for i in range(n)))

    def inverse(self) -> SeriesMatrix:
        """Inverse over k[[t]]/t^N; requires a unit determinant"""
        if not self.is_square:
            raise DimensionMismatchError("Only square matrices can be inverted")
        det = series_det(self)
        if not det.is_unit():
            raise NotInvertibleError(
                "Matrix determinant is not a unit of the base ring",
                {"determinant_valuation": str(det.valuation())},
            )
        inv_det = det.inverse()
        adj = self.adjugate()
        return SeriesMatrix(
            self.rows,
            self.cols,
            tuple(tuple(series_mul(e, inv_det) for e in row) for row in adj.entries),
        )


def series_det(m: SeriesMatrix) -> TruncatedSeries:
    """Determinant by exact, division-free expansion over column subsets

    Row r picks a column c not yet used; the sign counts used columns to the right
    of c. Cost is O(n 2^n) series products.
    """
    if not m.is_square:
        raise DimensionMismatchError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        raise DimensionMismatchError("Determinant of an empty matrix has no field")
    partial: dict[int, TruncatedSeries] = {0: TruncatedSeries.one(m.field, m.precision)}
    for r in range(n):
        row = m.entries[r]
        nxt: dict[int, TruncatedSeries] = {}
        for used, value in partial.items():
            if value.is_zero():
                continue
            for c in range(n):
                bit = 1 << c
                if used & bit or row[c].is_zero():
                    continue
                term = series_mul(value, row[c])
                if bin(used >> (c + 1)).count("1") % 2:
                    term = -term
                key = used | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        partial = nxt
    full = (1 << n) - 1
    return partial.get(full, TruncatedSeries.zero(m.field, m.precision))
