"""Crimp enumeration and isomorphism"""

import logging
from typing import Any

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.commands.inputs import (
    build_crimp,
    build_normalization,
    explicit_precision,
    resolve_field,
    resolve_strategy,
)
from covercrimp.crimp.classify import aut_orbits, crimps_isomorphic, tangent_cross_ratio
from covercrimp.crimp.enumerate import enumerate_crimps, search_space_size
from covercrimp.crimp.problem import CrimpProblem
from covercrimp.crimp.subalgebra import CrimpSubalgebra
from covercrimp.errors import DegenerateTangencyError
from covercrimp.schemas import CrimpsDocument, IsoDocument, parse_document

_logger = logging.getLogger(__name__)


def _cross_ratio(crimp: CrimpSubalgebra) -> dict[str, Any] | None:
    problem = crimp.problem
    if not problem.normalization.is_split or problem.degree != 3 or problem.b < 2:
        return None
    try:
        return tangent_cross_ratio(crimp).to_dict()
    except DegenerateTangencyError as err:
        _logger.debug(f"No tangent cross-ratio: {err.message}")
        return None


def _crimp_report(crimp: CrimpSubalgebra) -> dict[str, Any]:
    out = crimp.to_dict()
    out["certificate"] = crimp.branch_certificate()
    cross_ratio = _cross_ratio(crimp)
    if cross_ratio is not None:
        out["cross_ratio"] = cross_ratio
    return out


class CrimpCommands(CommandCollection):
    """crimps and iso"""

    def get_commands(self) -> list[Command]:
        return [
            Command(
                name="crimps",
                description="Enumerate the crimps of a normalization over F_q and their orbits",
                category=CommandCategory.CRIMP,
                document=CrimpsDocument,
                detailed_description="""Walks every subspace of codimension delta = (b - a)/2
containing (k[t]/t^b) + t^delta F, keeps the t-stable subalgebras whose lift has branch
valuation b, and groups them under the automorphisms of the normalization. The search
is refused before it starts when the number of candidates exceeds the budget.""",
            ),
            Command(
                name="iso",
                description="Decide whether two crimps of a split normalization are isomorphic",
                category=CommandCategory.CRIMP,
                document=IsoDocument,
            ),
        ]

    def _run_crimps(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(CrimpsDocument, document)
        field = resolve_field(cfg, doc.field)
        normalization = build_normalization(doc.normalization, field)
        problem = CrimpProblem(normalization, doc.b, explicit_precision(cfg, doc.precision))
        strategy = resolve_strategy(cfg, doc.strategy)
        crimps = enumerate_crimps(
            problem, budget=cfg.budget, workers=cfg.workers, strategy=strategy
        )
        orbits = aut_orbits(crimps, normalization)
        return {
            "problem": problem.descriptor(),
            "strategy": strategy.value,
            "search_space": search_space_size(problem),
            "count": len(crimps),
            "crimps": [_crimp_report(c) for c in crimps],
            "orbits": [o.to_dict() for o in orbits],
            "orbit_count": len(orbits),
        }

    def _run_iso(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(IsoDocument, document)
        field = resolve_field(cfg, doc.field)
        normalization = build_normalization(doc.normalization, field)
        problem = CrimpProblem(normalization, doc.b, explicit_precision(cfg, doc.precision))
        first = build_crimp(doc.first, problem)
        second = build_crimp(doc.second, problem)
        return {
            "problem": problem.descriptor(),
            "isomorphic": crimps_isomorphic(first, second, normalization),
            "first": _crimp_report(first),
            "second": _crimp_report(second),
        }
