"""Utility functions"""

from covercrimp.utils.enumeration_log import enumeration_logger
from covercrimp.utils.parallel import map_shards
from covercrimp.utils.union_find import UnionFind

__all__ = [
    "UnionFind",
    "enumeration_logger",
    "map_shards",
]
