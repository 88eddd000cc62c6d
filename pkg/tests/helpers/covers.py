"""Small constructors for series, covers and crimp problems"""

from covercrimp.arith.field import Field
from covercrimp.arith.series import TruncatedSeries
from covercrimp.cover.disk_cover import DiskCover, SplitEmbedding, from_branches, from_polynomial


def series(field: Field, coefficients, precision: int = 12) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients(field, coefficients, precision)


def polynomial_cover(field: Field, coefficients, precision: int = 12) -> DiskCover:
    """Monic polynomial cover from ascending coefficient lists"""
    return from_polynomial([series(field, c, precision) for c in coefficients])


def split_cover(field: Field, branches, precision: int = 12) -> DiskCover:
    return from_branches(SplitEmbedding.from_literals(field, branches, precision))
