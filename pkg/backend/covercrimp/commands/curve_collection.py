"""Weighted stability and the Riemann-Hurwitz solver"""

from typing import Any

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.commands.inputs import build_curve, resolve_epsilon
from covercrimp.curves.hassett import (
    is_epsilon_stable,
    riemann_hurwitz,
    stability_chambers,
    stability_thresholds,
)
from covercrimp.curves.marked_curve import arithmetic_genus
from covercrimp.schemas import RiemannHurwitzDocument, StableDocument, parse_document


class CurveCommands(CommandCollection):
    """stable and rh"""

    def get_commands(self) -> list[Command]:
        return [
            Command(
                name="stable",
                description="Weighted stability of a marked nodal curve with its walls",
                category=CommandCategory.CURVE,
                document=StableDocument,
            ),
            Command(
                name="rh",
                description="Solve 2g - 2 = d(2h - 2) + b for the missing b or g",
                category=CommandCategory.CURVE,
                document=RiemannHurwitzDocument,
            ),
        ]

    def _run_stable(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(StableDocument, document)
        curve = build_curve(doc.curve)
        params = resolve_epsilon(cfg, doc.epsilon)
        report = is_epsilon_stable(curve, params).to_dict()
        report["epsilon"] = str(params)
        report["curve"] = curve.to_dict()
        report["arithmetic_genus"] = None
        report["total_degree"] = None
        if curve.is_connected():
            genus = arithmetic_genus(curve)
            report["arithmetic_genus"] = genus
            report["total_degree"] = str(2 * genus - 2 + params.epsilon * curve.total_multiplicity)
        report["thresholds"] = [str(x) for x in stability_thresholds(curve)]
        report["chambers"] = [c.to_dict() for c in stability_chambers(curve)]
        return report

    def _run_rh(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(RiemannHurwitzDocument, document)
        return riemann_hurwitz(doc.d, doc.h, doc.b, doc.g).to_dict()
