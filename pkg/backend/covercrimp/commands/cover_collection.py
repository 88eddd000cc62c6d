"""Discriminants and table validation of disk covers"""

import logging
from typing import Any

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.commands.inputs import build_cover, resolve_field, resolve_precision
from covercrimp.cover.disk_cover import DiskCover, discriminant, tschirnhaus_split
from covercrimp.cover.oracle import resultant_valuation
from covercrimp.curves.hassett import multiplicity_window
from covercrimp.errors import CharacteristicError
from covercrimp.schemas import CoverDocument, parse_document
from covercrimp.serialization import series_to_dict, valuation_to_json

_logger = logging.getLogger(__name__)


def _describe(cover: DiskCover) -> dict[str, Any]:
    return {
        "degree": cover.degree,
        "field": cover.field.descriptor(),
        "precision": cover.precision,
        "label": cover.label,
    }


class CoverCommands(CommandCollection):
    """disc and validate"""

    def get_commands(self) -> list[Command]:
        return [
            Command(
                name="disc",
                description="Discriminant and branch valuation of a cover of the disk",
                category=CommandCategory.COVER,
                document=CoverDocument,
                detailed_description="""The cover is given by a monic polynomial (ascending
coefficients), by distinct branches, by structure constants or by a catalog name.
Reports the discriminant series, its t-adic valuation, whether the cover is etale and
the weight window (1/(m+1), 1/m] in which a branch point of multiplicity m first
appears. Polynomial covers are cross-checked against a resultant.""",
            ),
            Command(
                name="validate",
                description="Check the commutative-algebra axioms of a structure-constant table",
                category=CommandCategory.COVER,
                document=CoverDocument,
            ),
        ]

    def _run_disc(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(CoverDocument, document)
        field = resolve_field(cfg, doc.field)
        cover, expected = build_cover(doc, field, resolve_precision(cfg, doc.precision))
        disc = discriminant(cover)
        valuation = disc.exact_valuation()
        _logger.info(f"Branch valuation {valuation} for {cover.label or 'cover'} over {field}")
        report: dict[str, Any] = {
            "cover": _describe(cover),
            "discriminant": series_to_dict(disc),
            "branch_valuation": valuation,
            "etale": valuation == 0,
            "multiplicity_window": (
                [str(x) for x in multiplicity_window(valuation)] if valuation >= 1 else None
            ),
        }
        if expected is not None:
            report["expected_branch_valuation"] = expected
        if cover.embedding is not None:
            report["vandermonde_valuation"] = cover.embedding.vandermonde_valuation()
        if cover.polynomial is not None:
            report["resultant_valuation"] = valuation_to_json(
                resultant_valuation(cover.polynomial)
            )
        return report

    def _run_validate(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(CoverDocument, document)
        field = resolve_field(cfg, doc.field)
        cover, _ = build_cover(doc, field, resolve_precision(cfg, doc.precision))
        report = cover.validation.to_dict()
        report["cover"] = _describe(cover)
        report["tschirnhaus"] = None
        if report["valid"]:
            try:
                report["tschirnhaus"] = tschirnhaus_split(cover).to_dict()
            except CharacteristicError as err:
                _logger.info(f"No Tschirnhaus split: {err.message}")
        return report
