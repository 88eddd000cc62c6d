"""Shard-parallel map used by the exhaustive searches"""

import logging
from collections.abc import Callable, Sequence
from multiprocessing import Pool
from typing import Any, TypeVar

_logger = logging.getLogger(__name__)

S = TypeVar("S")
R = TypeVar("R")


def map_shards(
    worker: Callable[[Any, S], R],
    context: Any,
    shards: Sequence[S],
    workers: int = 1,
) -> list[R]:
    """Apply ``worker(context, shard)`` to every shard, results in shard order

    ``worker`` must be a module-level function and ``context`` picklable when
    ``workers > 1``.
    """
    if workers <= 1 or len(shards) <= 1:
        return [worker(context, shard) for shard in shards]

    processes = min(workers, len(shards))
    _logger.info(f"Dispatching {len(shards)} shards to {processes} processes")
    with Pool(processes=processes) as pool:
        pending = [pool.apply_async(worker, (context, shard)) for shard in shards]
        pool.close()
        pool.join()
        return [p.get() for p in pending]
