"""Hurwitz counts and etale covers of punctured curves"""

from typing import Any

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.monodromy.characters import connected_frobenius_count, frobenius_count
from covercrimp.monodromy.hurwitz import enumerate_etale_covers, hurwitz_count
from covercrimp.schemas import HurwitzDocument, parse_document


class MonodromyCommands(CommandCollection):
    """hurwitz"""

    def get_commands(self) -> list[Command]:
        return [
            Command(
                name="hurwitz",
                description="Count simply branched covers, or list covers with given local "
                "monodromy",
                category=CommandCategory.MONODROMY,
                document=HurwitzDocument,
                detailed_description="""With b, counts transposition tuples of degree d over
genus h by exhaustive enumeration and reports the raw count, the count weighted by
1/d! and the same number from the character formula. With punctures (a list of cycle
types), lists the tuples up to simultaneous conjugation with a connectivity flag and
the order of each local monodromy.""",
            ),
        ]

    def _run_hurwitz(self, document: Any, cfg) -> dict[str, Any]:
        doc = parse_document(HurwitzDocument, document)
        if doc.b is not None:
            count = hurwitz_count(
                doc.d,
                doc.h,
                doc.b,
                budget=cfg.budget,
                workers=cfg.workers,
                include_disconnected=doc.include_disconnected,
            )
            report = count.to_dict()
            oracle = frobenius_count if doc.include_disconnected else connected_frobenius_count
            report["character_formula"] = oracle(doc.d, doc.h, doc.b)
            return report
        punctures = doc.punctures or []
        classes = enumerate_etale_covers(
            doc.d, doc.h, punctures, budget=cfg.budget, workers=cfg.workers
        )
        return {
            "d": doc.d,
            "h": doc.h,
            "punctures": punctures,
            "class_count": len(classes),
            "connected_count": sum(1 for c in classes if c.connected),
            "classes": [c.to_dict() for c in classes],
        }
