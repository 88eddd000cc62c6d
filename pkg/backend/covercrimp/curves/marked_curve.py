"""Dual-graph model of divisorially marked nodal curves"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from covercrimp.errors import DisconnectedGraphError, DomainError, SchemaError
from covercrimp.utils import UnionFind


@dataclass(frozen=True)
class StabilityParams:
    """The weight epsilon, an exact rational in (0, 1]"""

    epsilon: Fraction

    def __post_init__(self):
        if not isinstance(self.epsilon, Fraction):
            object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if not 0 < self.epsilon <= 1:
            raise DomainError(f"epsilon must lie in (0, 1], got {self.epsilon}")

    @classmethod
    def parse(cls, text: str) -> StabilityParams:
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as err:
            raise SchemaError(f"Invalid epsilon: {text!r}") from err
        return cls(value)

    def __str__(self) -> str:
        return str(self.epsilon)


@dataclass(frozen=True)
class Marking:
    """A point of the divisor Sigma with its multiplicity, placed on a component"""

    component: int
    mult: int = 1


@dataclass(frozen=True)
class MarkedNodalCurve:
    """Components with geometric genera, nodes as edges, markings and sections"""

    components: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    markings: tuple[Marking, ...] = ()
    points: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.components:
            raise DomainError("A curve needs at least one component")
        n = len(self.components)
        if any(g < 0 for g in self.components):
            raise DomainError(f"Geometric genera must be nonnegative: {list(self.components)}")
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"Node ({i}, {j}) joins a missing component")
        for m in self.markings:
            if not 0 <= m.component < n:
                raise DomainError(f"Marking on missing component {m.component}")
            if m.mult < 1:
                raise DomainError(f"Marking multiplicity must be >= 1, got {m.mult}")
        for p in self.points:
            if not 0 <= p < n:
                raise DomainError(f"Point on missing component {p}")

    @classmethod
    def smooth(
        cls, genus: int, multiplicities: Sequence[int] = (), points: int = 0
    ) -> MarkedNodalCurve:
        return cls(
            (genus,),
            (),
            tuple(Marking(0, m) for m in multiplicities),
            (0,) * points,
        )

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def total_multiplicity(self) -> int:
        return sum(m.mult for m in self.markings)

    def is_connected(self) -> bool:
        forest = UnionFind(self.component_count)
        for i, j in self.edges:
            forest.union(i, j)
        return forest.class_count() == 1

    def node_branches(self) -> list[int]:
        """n_i: node branches on each component, self-loops counted twice"""
        counts = [0] * self.component_count
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    def marking_multiplicities(self) -> list[int]:
        """m_i: total marking multiplicity on each component"""
        totals = [0] * self.component_count
        for m in self.markings:
            totals[m.component] += m.mult
        return totals

    def to_dict(self) -> dict[str, Any]:
        return {
            "components": [{"genus": g} for g in self.components],
            "edges": [list(e) for e in self.edges],
            "markings": [{"component": m.component, "mult": m.mult} for m in self.markings],
            "points": [{"component": p} for p in self.points],
        }


def arithmetic_genus(curve: MarkedNodalCurve) -> int:
    """sum g~_i + #edges - #components + 1"""
    if not curve.is_connected():
        raise DisconnectedGraphError("Arithmetic genus of a disconnected dual graph")
    return sum(curve.components) + len(curve.edges) - curve.component_count + 1


def omega_epsilon_degrees(
    curve: MarkedNodalCurve, params: StabilityParams
) -> tuple[Fraction, ...]:
    """Degree of omega(eps Sigma) on each component: 2g~_i - 2 + n_i + eps m_i"""
    epsilon = params.epsilon
    branches = curve.node_branches()
    mults = curve.marking_multiplicities()
    return tuple(
        Fraction(2 * g - 2 + n) + epsilon * m
        for g, n, m in zip(curve.components, branches, mults)
    )
