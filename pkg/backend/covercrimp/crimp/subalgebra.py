"""Crimp subalgebras of F and their lifts to covers of the disk"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from covercrimp.arith.field import Raw
from covercrimp.arith.linalg import Row, canonical_basis, extend_to_basis, in_span, rref
from covercrimp.arith.matrix import SeriesMatrix, series_det
from covercrimp.cover.disk_cover import DiskCover, branch_valuation, trace_form
from covercrimp.cover.structure import BaseRing, StructureConstants
from covercrimp.crimp.problem import Automorphism, CrimpProblem
from covercrimp.errors import DomainError

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrimpCheck:
    """Outcome of a crimp test; ``invariant`` names the first failed condition"""

    ok: bool
    invariant: str | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "invariant": self.invariant, "reason": self.reason}


@dataclass(frozen=True)
class CrimpSubalgebra:
    """A subspace S of F, stored as its canonical RREF basis"""

    problem: CrimpProblem
    basis: tuple[Row, ...]

    @classmethod
    def from_rows(cls, problem: CrimpProblem, rows: Sequence[Sequence[Raw]]) -> CrimpSubalgebra:
        ambient = problem.ambient
        for row in rows:
            ambient.check_row(row)
        return cls(problem, canonical_basis(problem.field, rows))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def codimension(self) -> int:
        return self.problem.ambient.dimension - self.dimension

    @cached_property
    def pivots(self) -> list[int]:
        return rref(self.problem.field, self.basis)[1]

    def contains(self, row: Sequence[Raw]) -> bool:
        return in_span(self.problem.field, row, self.basis, self.pivots)

    def transform(self, automorphism: Automorphism) -> CrimpSubalgebra:
        ambient = self.problem.ambient
        return CrimpSubalgebra.from_rows(
            self.problem, [ambient.transform(automorphism.matrix, row) for row in self.basis]
        )

    @cached_property
    def lift(self) -> DiskCover:
        return lift_cover(self.problem, self.basis)

    def branch_certificate(self) -> dict[str, Any]:
        """Branch valuation of the lifted cover together with the data it was read from"""
        cover = self.lift
        return {
            "branch_valuation": branch_valuation(cover),
            "codimension": self.codimension,
            "delta": self.problem.delta,
            "lift_precision": cover.precision,
        }

    def to_dict(self) -> dict[str, Any]:
        field = self.problem.field
        return {
            "basis": [[field.format(x) for x in row] for row in self.basis],
            "dimension": self.dimension,
            "codimension": self.codimension,
        }


def lift_basis(problem: CrimpProblem, rows: Sequence[Sequence[Raw]]) -> list[Row]:
    """Members of S whose images form a basis of S/tS

    For a t-stable S containing t^(b-1) F these lift to an R-basis of the
    preimage O of S in O~.
    """
    ambient = problem.ambient
    t_rows = [ambient.times_t(r) for r in rows]
    return [tuple(r) for r in extend_to_basis(problem.field, t_rows, rows)]


def _lift_matrix(problem: CrimpProblem, rows: Sequence[Sequence[Raw]]) -> SeriesMatrix:
    chosen = lift_basis(problem, rows)
    d = problem.degree
    if len(chosen) != d:
        raise DomainError(
            f"Preimage of S needs {len(chosen)} generators, expected a free module of rank {d}",
            {"generators": len(chosen), "degree": d},
        )
    n = problem.working_precision
    columns = [problem.ambient.lift(r, n) for r in chosen]
    return SeriesMatrix(d, d, tuple(tuple(columns[c][r] for c in range(d)) for r in range(d)))


def lift_cover(problem: CrimpProblem, rows: Sequence[Sequence[Raw]]) -> DiskCover:
    """The cover O = preimage of S, in the basis given by ``lift_basis``

    Structure constants are P^-1 (o_i o_j); the exact division by det P costs
    val(det P) = delta digits of precision.
    """
    basis_matrix = _lift_matrix(problem, rows)
    normal = problem.lifting_normalization.cover
    table = normal.table
    d = problem.degree
    det = series_det(basis_matrix)
    adjugate = basis_matrix.adjugate()
    lifts = [basis_matrix.column(i) for i in range(d)]

    def solve(vector):
        return tuple(x.divide_exact(det) for x in adjugate.apply(vector))

    constants = tuple(
        tuple(solve(table.multiply(lifts[i], lifts[j])) for j in range(d)) for i in range(d)
    )
    unit = solve(table.unit)
    precision = min(x.precision for x in unit)
    lifted = StructureConstants(
        d,
        BaseRing(problem.field, precision),
        tuple(x.truncate(precision) for x in unit),
        tuple(tuple(tuple(x.truncate(precision) for x in v) for v in row) for row in constants),
    )
    return DiskCover(lifted, generically_etale=normal.generically_etale, label="crimp-lift")


def lattice_branch_valuation(problem: CrimpProblem, rows: Sequence[Sequence[Raw]]) -> int:
    """Branch valuation of the R-lattice O defined by a t-stable S

    Reads val det(P^T G P) where G is the trace form of O~; needs no
    multiplicative closure.
    """
    basis_matrix = _lift_matrix(problem, rows)
    gram = trace_form(problem.lifting_normalization.cover)
    return series_det(basis_matrix.transpose() @ gram @ basis_matrix).exact_valuation()


def is_crimp(rows: Sequence[Sequence[Raw]], problem: CrimpProblem) -> CrimpCheck:
    """Test the four crimp conditions in order and report the first failure"""
    ambient = problem.ambient
    field = problem.field
    for row in rows:
        ambient.check_row(row)
    basis, pivots = rref(field, rows)

    for j, row in enumerate(ambient.base_ring_rows()):
        if not in_span(field, row, basis, pivots):
            return CrimpCheck(False, "base-ring", f"t^{j}*1 is not in S")

    for i in range(len(basis)):
        for j in range(i, len(basis)):
            if not in_span(field, ambient.multiply(basis[i], basis[j]), basis, pivots):
                return CrimpCheck(
                    False, "closure", f"product s{i}*s{j} of basis vectors {i} and {j} leaves S"
                )

    codimension = ambient.dimension - len(basis)
    if codimension != problem.delta:
        return CrimpCheck(
            False, "codimension", f"codimension {codimension} differs from delta = {problem.delta}"
        )

    try:
        cover = lift_cover(problem, basis)
    except DomainError as err:
        return CrimpCheck(False, "lift", err.message)
    valuation = branch_valuation(cover)
    if valuation != problem.b:
        return CrimpCheck(
            False, "branch", f"lift has branch valuation {valuation}, expected {problem.b}"
        )
    return CrimpCheck(True)
