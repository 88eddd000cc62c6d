"""Exact scalar, series and matrix arithmetic"""

from covercrimp.arith.field import Field, parse_field
from covercrimp.arith.matrix import SeriesMatrix, series_det
from covercrimp.arith.series import AtLeast, TruncatedSeries, series_mul, series_valuation

__all__ = [
    "AtLeast",
    "Field",
    "SeriesMatrix",
    "TruncatedSeries",
    "parse_field",
    "series_det",
    "series_mul",
    "series_valuation",
]
