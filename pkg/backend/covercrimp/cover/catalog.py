"""Named local covers of the disk, each with its expected branch valuation"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from covercrimp.arith.field import Field
from covercrimp.arith.series import TruncatedSeries
from covercrimp.cover.disk_cover import DiskCover, SplitEmbedding, from_branches, from_polynomial
from covercrimp.cover.structure import BaseRing, StructureConstants
from covercrimp.errors import DomainError, SchemaError

Builder = Callable[[Field, int, Any], DiskCover]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    degree: int
    build: Builder
    expected_valuation: Callable[[Any], int]
    default_parameter: Any = None


def _poly(field: Field, precision: int, coefficients: list[list[Any]]) -> list[TruncatedSeries]:
    return [TruncatedSeries.from_coefficients(field, c, precision) for c in coefficients]


def _split(field: Field, precision: int, branches: list[list[Any]], label: str) -> DiskCover:
    return from_branches(SplitEmbedding.from_literals(field, branches, precision), label=label)


def _a_singularity(field: Field, precision: int, m: int) -> DiskCover:
    if m < 1:
        raise DomainError(f"A_m double covers need m >= 1, got {m}")
    constant = [0] * m + [-1]
    return from_polynomial(_poly(field, precision, [constant, [0], [1]]), label=f"A{m - 1}")


def _planar_triple_point(field: Field, precision: int, c: Any) -> DiskCover:
    c_raw = field.coerce(c)
    if c_raw in (0, 1):
        raise DomainError(f"Planar triple point needs c outside {{0, 1}}, got {c}")
    return _split(field, precision, [[0], [0, 1], [0, c_raw]], "planar-triple-point")


def _spatial_triple_point(field: Field, precision: int, _: Any = None) -> DiskCover:
    """R[x, y]/(xy, x(x - t), y(y - t)) in the basis 1, x, y"""
    base = BaseRing(field, precision)
    zero, one = base.zero(), base.one()
    t = TruncatedSeries.uniformizer(field, precision)
    e = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    table = StructureConstants(
        3,
        base,
        e[0],
        (
            (e[0], e[1], e[2]),
            (e[1], (zero, t, zero), (zero, zero, zero)),
            (e[2], (zero, zero, zero), (zero, zero, t)),
        ),
    )
    return DiskCover(table, generically_etale=True, label="spatial-triple-point")


CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in [
        CatalogEntry(
            "etale-pair",
            "two disjoint sections (0, 1)",
            2,
            lambda f, n, _: _split(f, n, [[0], [1]], "etale-pair"),
            lambda _: 0,
        ),
        CatalogEntry(
            "split-etale",
            "R^3 in its basis of idempotents",
            3,
            lambda f, n, _: DiskCover.diagonal(f, 3, n),
            lambda _: 0,
        ),
        CatalogEntry(
            "node",
            "x(x - t), two transverse branches",
            2,
            lambda f, n, _: _split(f, n, [[0], [0, 1]], "node"),
            lambda _: 2,
        ),
        CatalogEntry(
            "tacnode",
            "x(x - t^2), two branches tangent to first order",
            2,
            lambda f, n, _: _split(f, n, [[0], [0, 0, 1]], "tacnode"),
            lambda _: 4,
        ),
        CatalogEntry(
            "simple-ramification",
            "x^2 - t",
            2,
            lambda f, n, _: _a_singularity(f, n, 1),
            lambda _: 1,
        ),
        CatalogEntry(
            "A",
            "y^2 - t^m, the A_(m-1) double cover",
            2,
            lambda f, n, m: _a_singularity(f, n, int(m)),
            lambda m: int(m),
            default_parameter=2,
        ),
        CatalogEntry(
            "triple-ramification",
            "x^3 - t",
            3,
            lambda f, n, _: from_polynomial(
                _poly(f, n, [[0, -1], [0], [0], [1]]), "triple-ramification"
            ),
            lambda _: 2,
        ),
        CatalogEntry(
            "quadruple-ramification",
            "x^4 - t, ramification type (4)",
            4,
            lambda f, n, _: from_polynomial(
                _poly(f, n, [[0, -1], [0], [0], [0], [1]]), "quadruple-ramification"
            ),
            lambda _: 3,
        ),
        CatalogEntry(
            "stacked-simple",
            "(x^2 - t)((x - 1)^2 - t), two simple ramification points over t = 0",
            4,
            lambda f, n, _: from_polynomial(
                # x^4 - 2x^3 + (1 - 2t)x^2 + 2t x + t^2 - t
                _poly(f, n, [[0, -1, 1], [0, 2], [1, -2], [-2], [1]]),
                "stacked-simple",
            ),
            lambda _: 2,
        ),
        CatalogEntry(
            "ramified-node",
            "x(x^2 - t)",
            3,
            lambda f, n, _: from_polynomial(_poly(f, n, [[0], [0, -1], [0], [1]]), "ramified-node"),
            lambda _: 3,
        ),
        CatalogEntry(
            "planar-triple-point",
            "x(x - t)(x - ct), three coplanar branches",
            3,
            _planar_triple_point,
            lambda _: 6,
            default_parameter=2,
        ),
        CatalogEntry(
            "spatial-triple-point",
            "three independent lines through the origin",
            3,
            _spatial_triple_point,
            lambda _: 4,
        ),
    ]
}


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def catalog_entry(name: str) -> CatalogEntry:
    entry = CATALOG.get(name)
    if entry is None:
        raise SchemaError(f"Unknown catalog cover: {name}", {"known": catalog_names()})
    return entry


def build_catalog_cover(
    name: str, field: Field, precision: int, parameter: Any = None
) -> tuple[DiskCover, int]:
    """Build a catalog cover; returns the cover and its expected branch valuation"""
    entry = catalog_entry(name)
    if parameter is None:
        parameter = entry.default_parameter
    return entry.build(field, precision, parameter), entry.expected_valuation(parameter)
