"""Turn validated input documents into domain objects"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel

from covercrimp.arith.field import Field, parse_field
from covercrimp.arith.matrix import SeriesMatrix
from covercrimp.config import settings
from covercrimp.cover.catalog import build_catalog_cover
from covercrimp.cover.disk_cover import (
    DiskCover,
    SplitEmbedding,
    change_basis,
    from_branches,
    from_polynomial,
)
from covercrimp.cover.structure import BaseRing, StructureConstants
from covercrimp.crimp.classify import crimp_of
from covercrimp.crimp.enumerate import Strategy
from covercrimp.crimp.problem import CrimpProblem, NormalizationData
from covercrimp.crimp.subalgebra import CrimpSubalgebra, is_crimp
from covercrimp.curves.marked_curve import MarkedNodalCurve, Marking, StabilityParams
from covercrimp.errors import DomainError, SchemaError
from covercrimp.schemas import (
    CoverDocument,
    CrimpDocument,
    CurveDocument,
    NormalizationDocument,
)
from covercrimp.serialization import parse_series_list

if TYPE_CHECKING:
    from covercrimp.cli import JobConfig


def _plain(literal: Any) -> Any:
    if isinstance(literal, BaseModel):
        return literal.model_dump()
    return literal


def _series_list(literals: Sequence[Any], field: Field, precision: int):
    return parse_series_list([_plain(x) for x in literals], field, precision)


def resolve_field(cfg: JobConfig, document_field: Any = None) -> Field:
    """The --field flag, else the document's field, else the configured default"""
    if cfg.field is not None:
        return parse_field(cfg.field)
    if document_field is not None:
        return parse_field(document_field)
    return parse_field(settings.default_field)


def resolve_precision(cfg: JobConfig, document_precision: int | None = None) -> int:
    if cfg.precision is not None:
        return cfg.precision
    if document_precision is not None:
        return document_precision
    return settings.default_precision


def explicit_precision(cfg: JobConfig, document_precision: int | None = None) -> int | None:
    return cfg.precision if cfg.precision is not None else document_precision


def resolve_epsilon(cfg: JobConfig, document_epsilon: Any = None) -> StabilityParams:
    if cfg.epsilon is not None:
        return StabilityParams.parse(cfg.epsilon)
    if document_epsilon is not None:
        return StabilityParams.parse(str(document_epsilon))
    return StabilityParams(Fraction(1))


def resolve_strategy(cfg: JobConfig, document_strategy: str | None = None) -> Strategy:
    name = cfg.strategy or document_strategy or Strategy.SUBALGEBRA_FIRST.value
    try:
        return Strategy(name)
    except ValueError as err:
        raise SchemaError(
            f"Unknown strategy {name!r}", {"known": [s.value for s in Strategy]}
        ) from err


def build_cover(
    document: CoverDocument, field: Field, precision: int
) -> tuple[DiskCover, int | None]:
    """The cover and, for catalog covers, its expected branch valuation"""
    expected = None
    if document.polynomial is not None:
        cover = from_polynomial(_series_list(document.polynomial, field, precision), document.label)
    elif document.branches is not None:
        embedding = SplitEmbedding(tuple(_series_list(document.branches, field, precision)))
        cover = from_branches(embedding, document.label)
    elif document.table is not None:
        base = BaseRing(field, precision)
        table = StructureConstants.from_literals(
            base,
            _series_list(document.table.unit, field, precision),
            [
                [_series_list(v, field, precision) for v in row]
                for row in document.table.constants
            ],
        )
        cover = DiskCover.from_table(table, document.table.generically_etale, document.label)
    else:
        assert document.catalog is not None
        cover, expected = build_catalog_cover(
            document.catalog, field, precision, document.parameter
        )
    if document.basis_change is not None:
        matrix = SeriesMatrix.from_rows(
            [_series_list(row, field, precision) for row in document.basis_change]
        )
        cover = change_basis(cover, matrix)
    return cover, expected


def build_normalization(document: NormalizationDocument, field: Field) -> NormalizationData:
    if document.kind == "split":
        assert document.degree is not None
        return NormalizationData.split(field, document.degree)
    assert document.ramification is not None
    if document.kind == "ramified":
        (e,) = document.ramification
        return NormalizationData.ramified_disk(field, e, galois=document.galois)
    return NormalizationData.from_ramification(field, document.ramification, galois=document.galois)


def build_crimp(document: CrimpDocument, problem: CrimpProblem) -> CrimpSubalgebra:
    field = problem.field
    if document.branches is not None:
        precision = problem.working_precision
        embedding = SplitEmbedding(tuple(_series_list(document.branches, field, precision)))
        return crimp_of(from_branches(embedding), problem.b, problem)
    assert document.rows is not None
    rows = [[field.coerce(x) for x in row] for row in document.rows]
    check = is_crimp(rows, problem)
    if not check:
        raise DomainError(f"Rows do not span a crimp: {check.reason}", check.to_dict())
    return CrimpSubalgebra.from_rows(problem, rows)


def build_curve(document: CurveDocument) -> MarkedNodalCurve:
    return MarkedNodalCurve(
        tuple(c.genus for c in document.components),
        tuple((int(i), int(j)) for i, j in document.edges),
        tuple(Marking(m.component, m.mult) for m in document.markings),
        tuple(p.component for p in document.points),
    )

