"""Exhaustive enumeration of monodromy tuples

A tuple is (alpha_1, beta_1, ..., alpha_h, beta_h, sigma_1, ..., sigma_b) with
sigma_j in prescribed conjugacy classes and prod [alpha_i, beta_i] prod sigma_j = 1.
The walk keeps the running product; once the handles are placed, the remaining
branch entries must be able to cancel it, so its length may not exceed their
total length and must share its parity. The last branch entry is read off as
the inverse of the running product. Shards are the values of the first entry.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from covercrimp.config import settings
from covercrimp.errors import BudgetExceededError, DomainError
from covercrimp.monodromy.datum import BranchedMonodromy, is_connected, orbinode_index
from covercrimp.monodromy.permutation import (
    Perm,
    all_permutations,
    commutator,
    compose,
    conjugacy_class,
    cycle_type,
    identity,
    inverse,
    length,
    normalize_cycle_type,
)
from covercrimp.utils import enumeration_logger, map_shards

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _TupleSearch:
    degree: int
    genus: int
    slots: tuple[tuple[Perm, ...], ...]
    last_type: tuple[int, ...] | None
    remaining: tuple[int, ...]
    include_disconnected: bool


def _search(
    d: int, h: int, cycle_types: Sequence[Sequence[int]], include_disconnected: bool
) -> _TupleSearch:
    types = [normalize_cycle_type(shape, d) for shape in cycle_types]
    handle_slot = tuple(all_permutations(d))
    slots: list[tuple[Perm, ...]] = [handle_slot] * (2 * h)
    slots.extend(tuple(conjugacy_class(shape, d)) for shape in types[:-1])
    lengths = [d - len(shape) for shape in types]
    # remaining[k]: total length of the branch entries after slot k-1
    remaining = []
    for k in range(len(slots) + 1):
        placed = max(0, k - 2 * h)
        remaining.append(sum(lengths[placed:]))
    return _TupleSearch(
        degree=d,
        genus=h,
        slots=tuple(slots),
        last_type=types[-1] if types else None,
        remaining=tuple(remaining),
        include_disconnected=include_disconnected,
    )


def search_space_size(d: int, h: int, cycle_types: Sequence[Sequence[int]]) -> int:
    """(d!)^{2h} times the product of the class sizes"""
    size = math.factorial(d) ** (2 * h)
    for shape in cycle_types:
        size *= _class_size(shape, d)
    return size


def _class_size(shape: Sequence[int], d: int) -> int:
    parts = normalize_cycle_type(shape, d)
    centralizer = 1
    for part in set(parts):
        multiplicity = parts.count(part)
        centralizer *= part**multiplicity * math.factorial(multiplicity)
    return math.factorial(d) // centralizer


def _feasible(ctx: _TupleSearch, product: Perm, position: int) -> bool:
    if position < 2 * ctx.genus:
        return True
    budget = ctx.remaining[position]
    spent = length(product)
    return spent <= budget and (budget - spent) % 2 == 0


def _walk(ctx: _TupleSearch, first: Perm | None) -> Iterator[BranchedMonodromy]:
    """Valid tuples whose first entry is ``first``"""
    d = ctx.degree
    h = ctx.genus
    slots = ctx.slots
    entries: list[Perm] = []

    def finish(product: Perm) -> Iterator[BranchedMonodromy]:
        tail: list[Perm] = []
        if ctx.last_type is not None:
            last = inverse(product)
            if cycle_type(last) != ctx.last_type:
                return
            tail.append(last)
        elif product != identity(d):
            return
        chosen = entries + tail
        handles = tuple((chosen[2 * i], chosen[2 * i + 1]) for i in range(h))
        monodromy = BranchedMonodromy(d, h, handles, tuple(chosen[2 * h :]))
        if ctx.include_disconnected or is_connected(monodromy):
            yield monodromy

    def extend(position: int, product: Perm) -> Iterator[BranchedMonodromy]:
        if position == len(slots):
            yield from finish(product)
            return
        choices = slots[position] if position or first is None else (first,)
        for p in choices:
            entries.append(p)
            if position < 2 * h and position % 2 == 0:
                following = product
            elif position < 2 * h:
                following = compose(product, commutator(entries[-2], p))
            else:
                following = compose(product, p)
            if _feasible(ctx, following, position + 1):
                yield from extend(position + 1, following)
            entries.pop()

    yield from extend(0, identity(d))


def _count_shard(ctx: _TupleSearch, first: Perm | None) -> int:
    return sum(1 for _ in _walk(ctx, first))


def _collect_shard(ctx: _TupleSearch, first: Perm | None) -> list[BranchedMonodromy]:
    return list(_walk(ctx, first))


def _prepare(
    d: int,
    h: int,
    cycle_types: Sequence[Sequence[int]],
    budget: int | None,
    include_disconnected: bool,
) -> tuple[_TupleSearch, list[Perm | None]]:
    if d < 1 or h < 0:
        raise DomainError(f"Need d >= 1 and h >= 0, got d={d}, h={h}")
    budget = settings.default_budget if budget is None else budget
    cardinality = search_space_size(d, h, cycle_types)
    if cardinality > budget:
        enumeration_logger.warning(
            f"Refusing monodromy search: {cardinality} tuples exceed budget {budget}"
        )
        raise BudgetExceededError(
            f"Search space of {cardinality} tuples exceeds the budget of {budget}",
            cardinality,
            budget,
        )
    ctx = _search(d, h, cycle_types, include_disconnected)
    shards: list[Perm | None] = list(ctx.slots[0]) if ctx.slots else [None]
    enumeration_logger.info(
        f"Monodromy search: d={d} h={h} classes={[list(s) for s in cycle_types]}, "
        f"{cardinality} tuples in {len(shards)} shards"
    )
    return ctx, shards


def list_monodromies(
    d: int,
    h: int,
    cycle_types: Sequence[Sequence[int]],
    budget: int | None = None,
    workers: int | None = None,
    include_disconnected: bool = False,
) -> list[BranchedMonodromy]:
    """Every valid tuple with the given branch classes, in walk order"""
    ctx, shards = _prepare(d, h, cycle_types, budget, include_disconnected)
    workers = settings.workers if workers is None else workers
    results = map_shards(_collect_shard, ctx, shards, workers)
    return [m for shard in results for m in shard]


def count_monodromies(
    d: int,
    h: int,
    cycle_types: Sequence[Sequence[int]],
    budget: int | None = None,
    workers: int | None = None,
    include_disconnected: bool = False,
) -> int:
    ctx, shards = _prepare(d, h, cycle_types, budget, include_disconnected)
    workers = settings.workers if workers is None else workers
    total = sum(map_shards(_count_shard, ctx, shards, workers))
    enumeration_logger.info(f"Monodromy search found {total} tuples")
    return total


@dataclass(frozen=True)
class HurwitzCount:
    """Raw tuple count and its groupoid weighting raw / d!"""

    degree: int
    genus: int
    b: int
    raw: int
    weighted: Fraction
    include_disconnected: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.degree,
            "h": self.genus,
            "b": self.b,
            "raw": self.raw,
            "weighted": str(self.weighted),
            "connected_only": not self.include_disconnected,
        }


def hurwitz_count(
    d: int,
    h: int,
    b: int,
    budget: int | None = None,
    workers: int | None = None,
    include_disconnected: bool = False,
) -> HurwitzCount:
    """Simply branched monodromy tuples of degree d over genus h with b transpositions"""
    if b < 0:
        raise DomainError(f"b must be nonnegative, got {b}")
    transposition_types = [(2,)] * b if d >= 2 else []
    if d < 2 and b > 0:
        raw = 0
    else:
        raw = count_monodromies(d, h, transposition_types, budget, workers, include_disconnected)
    weighted = Fraction(raw, math.factorial(d))
    _logger.debug(f"hurwitz_count(d={d}, h={h}, b={b}) = {raw}, weighted {weighted}")
    return HurwitzCount(d, h, b, raw, weighted, include_disconnected)


@dataclass(frozen=True)
class EtaleCoverClass:
    """Conjugacy-class representative with its connectivity and local orbinode orders"""

    monodromy: BranchedMonodromy
    connected: bool

    @property
    def orbinode_orders(self) -> list[int]:
        return [orbinode_index(s) for s in self.monodromy.branches]

    def to_dict(self) -> dict[str, Any]:
        out = self.monodromy.to_dict()
        out["connected"] = self.connected
        out["orbinode_orders"] = self.orbinode_orders
        return out


def enumerate_etale_covers(
    d: int,
    h: int,
    punctures: Sequence[Sequence[int]] = (),
    budget: int | None = None,
    workers: int | None = None,
) -> list[EtaleCoverClass]:
    """Covers of a genus-h curve punctured with prescribed local monodromy, up to conjugacy"""
    tuples = list_monodromies(d, h, punctures, budget, workers, include_disconnected=True)
    representatives = {m.canonical() for m in tuples}
    out = [
        EtaleCoverClass(m, is_connected(m))
        for m in sorted(representatives, key=lambda m: m.entries())
    ]
    _logger.debug(f"{len(tuples)} tuples fall into {len(out)} conjugacy classes")
    return out
