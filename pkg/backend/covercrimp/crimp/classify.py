"""Crimps of explicit covers, automorphism orbits and tangent-line invariants"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from covercrimp.arith.field import Field, Raw
from covercrimp.arith.linalg import extend_to_basis, kernel, rank
from covercrimp.arith.series import TruncatedSeries
from covercrimp.cover.disk_cover import DiskCover, SplitEmbedding, branch_valuation
from covercrimp.crimp.problem import CrimpProblem, NormalizationData
from covercrimp.crimp.subalgebra import CrimpSubalgebra
from covercrimp.errors import (
    BranchMismatchError,
    DegenerateTangencyError,
    DomainError,
    InconsistentProblemError,
)
from covercrimp.utils import UnionFind

_logger = logging.getLogger(__name__)


def crimp_of(cover: DiskCover, b: int, problem: CrimpProblem | None = None) -> CrimpSubalgebra:
    """Reduction modulo t^b O~ of a cover presented inside its split normalization"""
    if cover.embedding is None:
        raise DomainError("crimp_of needs a cover built from branches")
    valuation = branch_valuation(cover)
    if valuation != b:
        raise BranchMismatchError(
            f"Cover has branch valuation {valuation}, not {b}", {"valuation": valuation, "b": b}
        )
    d = cover.degree
    if problem is None:
        problem = CrimpProblem(NormalizationData.split(cover.field, d), b)
    elif not problem.normalization.is_split or problem.degree != d or problem.b != b:
        raise InconsistentProblemError(
            "Crimp problem does not match the cover", {"problem": problem.descriptor()}
        )
    ambient = problem.ambient
    branches = [u.truncate(b) for u in cover.embedding.branches]
    powers = [TruncatedSeries.one(cover.field, b) for _ in branches]
    rows = []
    for _ in range(d):
        row = ambient.from_series(powers)
        for _ in range(b):
            rows.append(row)
            row = ambient.times_t(row)
        powers = [p * u for p, u in zip(powers, branches)]
    return CrimpSubalgebra.from_rows(problem, rows)


def _check_consistent(crimps: Sequence[CrimpSubalgebra], normalization: NormalizationData) -> None:
    if not crimps:
        return
    problem = crimps[0].problem
    for c in crimps[1:]:
        if c.problem != problem:
            raise InconsistentProblemError("Crimps solve different crimping problems")
    if normalization.at_precision(problem.b).cover.table != problem.ambient.table:
        raise InconsistentProblemError("Normalization differs from the crimps' normalization")


@dataclass(frozen=True)
class CrimpOrbit:
    representative: CrimpSubalgebra
    members: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"representative": self.members[0], "members": list(self.members)}


def aut_orbits(
    crimps: Sequence[CrimpSubalgebra], normalization: NormalizationData
) -> list[CrimpOrbit]:
    """Partition of ``crimps`` under the automorphisms of the normalization

    Orbits are listed by their first member; images outside the list are ignored.
    """
    _check_consistent(crimps, normalization)
    if not crimps:
        return []
    automorphisms = normalization.at_precision(crimps[0].problem.b).automorphisms
    index = {c.basis: i for i, c in enumerate(crimps)}
    forest = UnionFind(len(crimps))
    for i, c in enumerate(crimps):
        for automorphism in automorphisms:
            j = index.get(c.transform(automorphism).basis)
            if j is not None:
                forest.union(i, j)
    orbits = [CrimpOrbit(crimps[cls[0]], tuple(cls)) for cls in forest.classes()]
    _logger.debug(f"{len(crimps)} crimps fall into {len(orbits)} orbits")
    return orbits


def crimps_isomorphic(
    first: CrimpSubalgebra, second: CrimpSubalgebra, normalization: NormalizationData
) -> bool:
    """Whether a permutation of the branches carries one crimp to the other"""
    if not normalization.is_split:
        raise DomainError(
            "Crimp isomorphism is only decided over split normalizations",
            {"normalization": normalization.kind},
        )
    _check_consistent([first, second], normalization)
    automorphisms = normalization.at_precision(first.problem.b).automorphisms
    return any(first.transform(a).basis == second.basis for a in automorphisms)


@dataclass(frozen=True)
class CrossRatio:
    """Cross-ratio of slopes normalized to (0, 1, c, infinity) and its S_3 orbit"""

    field: Field
    value: Raw
    orbit: tuple[Raw, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.field.format(self.value),
            "orbit": [self.field.format(x) for x in self.orbit],
        }


def cross_ratio_orbit(field: Field, c: Raw) -> tuple[Raw, ...]:
    """{c, 1/c, 1-c, 1/(1-c), c/(c-1), (c-1)/c}, sorted"""
    one = field.one
    one_minus = field.sub(one, c)
    c_minus = field.sub(c, one)
    values = {
        c,
        field.inv(c),
        one_minus,
        field.inv(one_minus),
        field.div(c, c_minus),
        field.div(c_minus, c),
    }
    return tuple(sorted(values))


def cross_ratio_from_slopes(field: Field, slopes: Sequence[Raw]) -> CrossRatio:
    s1, s2, s3 = slopes
    if len({s1, s2, s3}) < 3:
        raise DegenerateTangencyError(
            "Two branches share a tangent direction", {"slopes": [field.format(s) for s in slopes]}
        )
    c = field.div(field.sub(s3, s1), field.sub(s2, s1))
    return CrossRatio(field, c, cross_ratio_orbit(field, c))


def branch_cross_ratio(embedding: SplitEmbedding) -> CrossRatio:
    """Cross-ratio of three branch tangents and the fiber direction, read from the branches"""
    if embedding.degree != 3:
        raise DomainError(f"Tangent cross-ratio needs three branches, got {embedding.degree}")
    if len({u.coefficient(0) for u in embedding.branches}) != 1:
        raise DegenerateTangencyError("Branches do not pass through one point")
    return cross_ratio_from_slopes(embedding.field, [u.coefficient(1) for u in embedding.branches])


def tangent_cross_ratio(crimp: CrimpSubalgebra) -> CrossRatio:
    """Cross-ratio of the tangent configuration of a planar triple point, read from S

    The cotangent space m/m^2 is spanned by t and one more element x; branch
    alpha has tangent [1 : x_alpha'(0)] and the fiber direction is [0 : 1].
    """
    problem = crimp.problem
    if not problem.normalization.is_split or problem.degree != 3:
        raise DomainError("Tangent cross-ratio needs a split normalization of degree 3")
    if problem.b < 2:
        raise DomainError("Tangent directions need b >= 2")
    field = problem.field
    ambient = problem.ambient
    basis = [list(r) for r in crimp.basis]

    constant_map = [[row[alpha * ambient.b] for row in basis] for alpha in range(3)]
    if rank(field, constant_map) != 1:
        raise DegenerateTangencyError("Branches do not pass through one point")
    maximal = []
    for coeffs in kernel(field, constant_map, len(basis)):
        row = [field.zero] * ambient.dimension
        for c, r in zip(coeffs, basis):
            if c != 0:
                row = [field.add(x, field.mul(c, y)) for x, y in zip(row, r)]
        maximal.append(row)

    square = [
        list(ambient.multiply(maximal[i], maximal[j]))
        for i in range(len(maximal))
        for j in range(i, len(maximal))
    ]
    cotangent = rank(field, maximal) - rank(field, square)
    if cotangent != 2:
        raise DegenerateTangencyError(
            f"Embedding dimension is {cotangent}; tangent lines need a planar triple point",
            {"embedding_dimension": cotangent},
        )
    t_row = list(ambient.times_t(ambient.unit_row()))
    extra = extend_to_basis(field, square + [t_row], maximal)
    slopes = ambient.linear_terms(extra[0])
    return cross_ratio_from_slopes(field, slopes)
