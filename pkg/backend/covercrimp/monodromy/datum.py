"""Monodromy data of branched covers of a genus-h curve"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from covercrimp.errors import DisconnectedGraphError, DomainError, SchemaError
from covercrimp.monodromy.permutation import (
    Perm,
    all_permutations,
    commutator,
    compose,
    conjugate,
    cycles,
    format_cycles,
    identity,
    is_perm,
    length,
    order,
    parse_perm,
)
from covercrimp.utils import UnionFind


@dataclass(frozen=True)
class BranchedMonodromy:
    """Handle pairs (alpha_i, beta_i) and branch permutations sigma_j in S_d"""

    degree: int
    genus: int
    handles: tuple[tuple[Perm, Perm], ...] = ()
    branches: tuple[Perm, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError(f"Degree must be positive, got {self.degree}")
        if len(self.handles) != self.genus:
            raise SchemaError(f"Genus {self.genus} needs {self.genus} handle pairs")
        for p in self.entries():
            if len(p) != self.degree or not is_perm(p):
                raise SchemaError(f"{p} is not a permutation of S_{self.degree}")

    @classmethod
    def parse(
        cls,
        degree: int,
        handles: Sequence[Sequence[Any]] = (),
        branches: Sequence[Any] = (),
    ) -> BranchedMonodromy:
        """From cycle-notation strings or 1-based image lists"""
        return cls(
            degree,
            len(handles),
            tuple((parse_perm(a, degree), parse_perm(b, degree)) for a, b in handles),
            tuple(parse_perm(s, degree) for s in branches),
        )

    def entries(self) -> list[Perm]:
        """alpha_1, beta_1, ..., alpha_h, beta_h, sigma_1, ..., sigma_b"""
        out = []
        for a, b in self.handles:
            out.extend([a, b])
        out.extend(self.branches)
        return out

    def relation(self) -> Perm:
        """prod [alpha_i, beta_i] * prod sigma_j"""
        out = identity(self.degree)
        for a, b in self.handles:
            out = compose(out, commutator(a, b))
        for s in self.branches:
            out = compose(out, s)
        return out

    @property
    def branch_degree(self) -> int:
        """b = sum_j (d - #cycles(sigma_j))"""
        return sum(length(s) for s in self.branches)

    def conjugate_by(self, g: Perm) -> BranchedMonodromy:
        return BranchedMonodromy(
            self.degree,
            self.genus,
            tuple((conjugate(a, g), conjugate(b, g)) for a, b in self.handles),
            tuple(conjugate(s, g) for s in self.branches),
        )

    def canonical(self) -> BranchedMonodromy:
        """Lexicographically smallest simultaneous conjugate"""
        best = min(
            (self.conjugate_by(g) for g in all_permutations(self.degree)),
            key=lambda m: m.entries(),
        )
        return best

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "genus": self.genus,
            "handles": [[format_cycles(a), format_cycles(b)] for a, b in self.handles],
            "branches": [format_cycles(s) for s in self.branches],
        }


def validate(monodromy: BranchedMonodromy) -> bool:
    """Whether the surface-group relation holds"""
    return monodromy.relation() == identity(monodromy.degree)


def is_connected(monodromy: BranchedMonodromy) -> bool:
    """Whether the entries generate a transitive subgroup"""
    forest = UnionFind(monodromy.degree)
    for p in monodromy.entries():
        for cycle in cycles(p):
            for x in cycle[1:]:
                forest.union(cycle[0], x)
    return forest.class_count() == 1


def cover_genus(monodromy: BranchedMonodromy) -> int:
    """g from 2g - 2 = d(2h - 2) + b"""
    if not validate(monodromy):
        raise DomainError("Monodromy violates the surface-group relation")
    if not is_connected(monodromy):
        raise DisconnectedGraphError("Monodromy is not transitive; the cover is disconnected")
    two_g = monodromy.degree * (2 * monodromy.genus - 2) + monodromy.branch_degree + 2
    assert two_g % 2 == 0 and two_g >= 0, "valid connected monodromy has integral genus"
    return two_g // 2


def orbinode_index(p: Perm) -> int:
    """Smallest orbinode order admitting a representable local monodromy, the order of p"""
    return order(p)
