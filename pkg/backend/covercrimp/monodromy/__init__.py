"""Monodromy tuples, Hurwitz counts and orbinode indices"""

from covercrimp.monodromy.characters import (
    connected_frobenius_count,
    content_sum,
    dimension,
    frobenius_count,
    partitions,
)
from covercrimp.monodromy.datum import (
    BranchedMonodromy,
    cover_genus,
    is_connected,
    orbinode_index,
    validate,
)
from covercrimp.monodromy.hurwitz import (
    EtaleCoverClass,
    HurwitzCount,
    count_monodromies,
    enumerate_etale_covers,
    hurwitz_count,
    list_monodromies,
    search_space_size,
)
from covercrimp.monodromy.permutation import Perm, format_cycles, parse_cycles, parse_perm

__all__ = [
    "BranchedMonodromy",
    "EtaleCoverClass",
    "HurwitzCount",
    "Perm",
    "connected_frobenius_count",
    "content_sum",
    "count_monodromies",
    "cover_genus",
    "dimension",
    "enumerate_etale_covers",
    "format_cycles",
    "frobenius_count",
    "hurwitz_count",
    "is_connected",
    "list_monodromies",
    "orbinode_index",
    "parse_cycles",
    "parse_perm",
    "partitions",
    "search_space_size",
    "validate",
]
