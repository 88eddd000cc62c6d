"""Finite flat covers of the formal disk Spec k[[t]], truncated at t^N"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any

from covercrimp.arith.field import Field
from covercrimp.arith.matrix import SeriesMatrix, series_det
from covercrimp.arith.series import AtLeast, TruncatedSeries, series_mul
from covercrimp.cover.structure import (
    BaseRing,
    StructureConstants,
    ValidationReport,
    Vector,
    validate_algebra,
)
from covercrimp.errors import (
    CharacteristicError,
    DimensionMismatchError,
    IndistinctBranchesError,
    InvalidTableError,
    NonMonicError,
    NotInvertibleError,
)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitEmbedding:
    """Branches u_1..u_d of a split cover; x maps to (u_1, ..., u_d) in R^d"""

    branches: tuple[TruncatedSeries, ...]

    def __post_init__(self):
        if not self.branches:
            raise DimensionMismatchError("A split embedding needs at least one branch")
        fields = {u.field for u in self.branches}
        if len(fields) != 1:
            raise DimensionMismatchError("Branches live over different fields")
        for i in range(len(self.branches)):
            for j in range(i + 1, len(self.branches)):
                gap = (self.branches[i] - self.branches[j]).valuation()
                if isinstance(gap, AtLeast):
                    raise IndistinctBranchesError(
                        f"Branches {i} and {j} agree to precision {gap.bound}",
                        {"branches": [i, j], "precision": gap.bound},
                    )

    @classmethod
    def from_literals(
        cls, field: Field, branches: Sequence[Any], precision: int
    ) -> SplitEmbedding:
        out = []
        for u in branches:
            if isinstance(u, (list, tuple)):
                out.append(TruncatedSeries.from_coefficients(field, u, precision))
            else:
                out.append(TruncatedSeries.constant(field, u, precision))
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.branches)

    @property
    def field(self) -> Field:
        return self.branches[0].field

    @property
    def precision(self) -> int:
        return min(u.precision for u in self.branches)

    def pairwise_valuations(self) -> dict[tuple[int, int], int]:
        d = self.degree
        return {
            (i, j): (self.branches[i] - self.branches[j]).exact_valuation()
            for i in range(d)
            for j in range(i + 1, d)
        }

    def vandermonde_valuation(self) -> int:
        """2 * sum_{i<j} val(u_i - u_j), the branch valuation of the cover they cut out"""
        return 2 * sum(self.pairwise_valuations().values())

    def polynomial(self) -> tuple[TruncatedSeries, ...]:
        """Ascending coefficients of prod_i (x - u_i)"""
        n = self.precision
        coeffs = [TruncatedSeries.one(self.field, n)]
        for u in self.branches:
            u = u.truncate(n)
            nxt = [TruncatedSeries.zero(self.field, n)] * (len(coeffs) + 1)
            for k, a in enumerate(coeffs):
                nxt[k + 1] = nxt[k + 1] + a
                nxt[k] = nxt[k] - series_mul(u, a)
            coeffs = nxt
        return tuple(coeffs)


@dataclass(frozen=True)
class DiskCover:
    """A rank-d algebra over k[t]/t^N with its provenance

    ``generically_etale`` certifies the cover is split away from t = 0 (distinct
    branches, or a lift inside a tamely ramified normalization); discriminant
    queries over small characteristic are only answered for such covers.
    """

    table: StructureConstants
    polynomial: tuple[TruncatedSeries, ...] | None = None
    embedding: SplitEmbedding | None = None
    generically_etale: bool = False
    label: str | None = dataclass_field(default=None, compare=False)

    def __post_init__(self):
        if self.table.base.is_field:
            raise DimensionMismatchError("A disk cover needs a truncated-series base ring")

    @classmethod
    def from_table(
        cls,
        table: StructureConstants,
        generically_etale: bool = False,
        label: str | None = None,
    ) -> DiskCover:
        return cls(table, generically_etale=generically_etale, label=label)

    @classmethod
    def diagonal(cls, field: Field, degree: int, precision: int) -> DiskCover:
        """The split etale cover R^d with its idempotent basis"""
        base = BaseRing(field, precision)
        one, zero = base.one(), base.zero()
        constants = tuple(
            tuple(
                tuple(one if (i == j == k) else zero for k in range(degree))
                for j in range(degree)
            )
            for i in range(degree)
        )
        table = StructureConstants(degree, base, (one,) * degree, constants)
        return cls(table, generically_etale=True, label=f"split-{degree}")

    @property
    def degree(self) -> int:
        return self.table.degree

    @property
    def field(self) -> Field:
        return self.table.field

    @property
    def precision(self) -> int:
        return self.table.base.series_precision

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_algebra(self.table)

    def require_valid(self) -> None:
        report = self.validation
        if not report.valid:
            first = report.violations[0]
            raise InvalidTableError(
                f"Structure constants fail the {first.kind} law: {first.detail}",
                {"violations": len(report.violations)},
            )


def from_polynomial(
    coefficients: Sequence[TruncatedSeries], label: str | None = None
) -> DiskCover:
    """R[x]/f in the basis 1, x, ..., x^(d-1); ``coefficients`` are ascending, f monic"""
    if len(coefficients) < 2:
        raise NonMonicError("A cover polynomial needs degree at least 1")
    field = coefficients[0].field
    n = min(c.precision for c in coefficients)
    coeffs = [c.truncate(n) for c in coefficients]
    if coeffs[-1] != TruncatedSeries.one(field, n):
        raise NonMonicError(
            f"Leading coefficient is {coeffs[-1]}, expected 1", {"degree": len(coeffs) - 1}
        )
    d = len(coeffs) - 1
    base = BaseRing(field, n)
    zero, one = base.zero(), base.one()

    # powers[m] = coordinates of x^m for m = 0 .. 2d-2
    powers: list[list[TruncatedSeries]] = []
    for m in range(d):
        powers.append([one if k == m else zero for k in range(d)])
    x_d = [-c for c in coeffs[:d]]
    for m in range(d, 2 * d - 1):
        prev = powers[m - 1]
        top = prev[d - 1]
        nxt = [zero] + prev[: d - 1]
        if not top.is_zero():
            nxt = [a + series_mul(top, b) for a, b in zip(nxt, x_d)]
        powers.append(nxt)

    constants = tuple(
        tuple(tuple(powers[i + j]) for j in range(d)) for i in range(d)
    )
    unit = tuple(one if k == 0 else zero for k in range(d))
    table = StructureConstants(d, base, unit, constants)
    return DiskCover(table, polynomial=tuple(coeffs), label=label)


def from_branches(embedding: SplitEmbedding, label: str | None = None) -> DiskCover:
    """The cover cut out by distinct branches, R[x]/prod(x - u_i) with the embedding retained"""
    cover = from_polynomial(embedding.polynomial())
    return DiskCover(
        cover.table,
        polynomial=cover.polynomial,
        embedding=embedding,
        generically_etale=True,
        label=label,
    )


def trace_form(cover: DiskCover) -> SeriesMatrix:
    """Symmetric matrix of tr(e_i e_j)"""
    cover.require_valid()
    table = cover.table
    d = table.degree
    tau = table.traces()
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = table.base.zero()
            for m in range(d):
                acc = acc + series_mul(table.constants[i][j][m], tau[m])
            row.append(acc)
        rows.append(tuple(row))
    return SeriesMatrix(d, d, tuple(rows))


def _check_characteristic(cover: DiskCover) -> None:
    field = cover.field
    if field.is_finite and field.characteristic <= cover.degree and not cover.generically_etale:
        raise CharacteristicError(
            f"Discriminants of degree-{cover.degree} covers are not answered over {field}",
            {"characteristic": field.characteristic, "degree": cover.degree},
        )


def discriminant(cover: DiskCover) -> TruncatedSeries:
    """det of the trace form; defined up to the square of a unit"""
    _check_characteristic(cover)
    return series_det(trace_form(cover))


def branch_valuation(cover: DiskCover) -> int:
    """Multiplicity of the branch divisor at the origin; needs precision above the answer"""
    return discriminant(cover).exact_valuation()


def is_etale(cover: DiskCover) -> bool:
    return discriminant(cover).is_unit()


def change_basis(cover: DiskCover, matrix: SeriesMatrix) -> DiskCover:
    """The same algebra in the basis given by the columns of ``matrix``"""
    table = cover.table
    d = table.degree
    if matrix.rows != d or matrix.cols != d:
        raise DimensionMismatchError(
            f"Basis change must be {d}x{d}, got {matrix.rows}x{matrix.cols}"
        )
    n = min(matrix.precision, cover.precision)
    if n < cover.precision:
        table = table.with_precision(n)
    if matrix.precision > n:
        matrix = SeriesMatrix.from_rows([[e.truncate(n) for e in row] for row in matrix.entries])
    try:
        inverse = matrix.inverse()
    except NotInvertibleError as err:
        raise NotInvertibleError(
            "Basis change matrix is not invertible over the base ring", err.details
        ) from err

    columns = [matrix.column(i) for i in range(d)]
    constants = tuple(
        tuple(inverse.apply(table.multiply(columns[i], columns[j])) for j in range(d))
        for i in range(d)
    )
    unit = inverse.apply(table.unit)
    new_table = StructureConstants(d, BaseRing(table.field, n), unit, constants)
    return DiskCover(new_table, generically_etale=cover.generically_etale, label=cover.label)


@dataclass(frozen=True)
class TschirnhausSplit:
    """Trace-zero complement F of the unit line with its generation certificate"""

    basis: tuple[Vector, ...]
    complement_determinant: TruncatedSeries

    @property
    def generates(self) -> bool:
        """1 together with F spans the algebra, so F generates it"""
        return self.complement_determinant.is_unit()

    def to_dict(self) -> dict[str, Any]:
        return {
            "basis": [[str(x) for x in v] for v in self.basis],
            "generates": self.generates,
        }


def tschirnhaus_split(cover: DiskCover) -> TschirnhausSplit:
    """Split off the unit line with 1/d times the trace map"""
    d = cover.degree
    field = cover.field
    if not field.is_invertible_integer(d):
        raise CharacteristicError(
            f"Degree {d} is not invertible in {field}",
            {"characteristic": field.characteristic, "degree": d},
        )
    cover.require_valid()
    table = cover.table
    unit = table.unit
    pivot = next((p for p in range(d) if unit[p].is_unit()), None)
    if pivot is None:
        raise NotInvertibleError("Unit has no invertible coordinate; the module is not free")
    inv_d = field.inv(field.coerce(d))
    traces = table.traces()
    basis = []
    for i in range(d):
        if i == pivot:
            continue
        shift = traces[i].scale(inv_d)
        e_i = table.basis_vector(i)
        basis.append(tuple(e - series_mul(shift, u) for e, u in zip(e_i, unit)))

    columns = [unit] + basis
    frame = SeriesMatrix(
        d, d, tuple(tuple(columns[c][r] for c in range(d)) for r in range(d))
    )
    certificate = series_det(frame)
    _logger.debug(f"Trace splitting of degree {d} pivots on e{pivot}")
    return TschirnhausSplit(tuple(basis), certificate)
