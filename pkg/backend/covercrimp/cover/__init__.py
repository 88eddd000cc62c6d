"""Finite flat covers of a formal disk"""

from covercrimp.cover.disk_cover import (
    DiskCover,
    SplitEmbedding,
    TschirnhausSplit,
    branch_valuation,
    change_basis,
    discriminant,
    from_branches,
    from_polynomial,
    is_etale,
    trace_form,
    tschirnhaus_split,
)
from covercrimp.cover.structure import (
    BaseRing,
    StructureConstants,
    ValidationReport,
    Violation,
    validate_algebra,
)

__all__ = [
    "BaseRing",
    "DiskCover",
    "SplitEmbedding",
    "StructureConstants",
    "TschirnhausSplit",
    "ValidationReport",
    "Violation",
    "branch_valuation",
    "change_basis",
    "discriminant",
    "from_branches",
    "from_polynomial",
    "is_etale",
    "trace_form",
    "tschirnhaus_split",
    "validate_algebra",
]
