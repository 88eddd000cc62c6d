"""Exhaustive enumeration of crimps over a finite field

Every crimp S of length delta contains S0 = (k[t]/t^b) * 1 + t^delta F, so the
search walks the codimension-delta subspaces of F containing S0. These are
the kernels of delta x n functionals on W = F/S0, n = (d - 1) * delta, one per
RREF matrix; RREF matrices are sharded by pivot set.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum

from covercrimp.arith.field import Raw
from covercrimp.arith.linalg import (
    Row,
    canonical_basis,
    gaussian_binomial,
    iter_rref_with_pivots,
    kernel,
    reduce_vector,
    rref,
)
from covercrimp.config import settings
from covercrimp.cover.disk_cover import branch_valuation
from covercrimp.crimp.problem import CrimpProblem
from covercrimp.crimp.subalgebra import CrimpSubalgebra, lattice_branch_valuation, lift_cover
from covercrimp.errors import BudgetExceededError, DomainError
from covercrimp.utils import enumeration_logger, map_shards

_logger = logging.getLogger(__name__)


class Strategy(Enum):
    """Order in which the two crimp conditions are imposed"""

    SUBALGEBRA_FIRST = "subalgebra-first"
    BRANCH_FIRST = "branch-first"


@dataclass(frozen=True)
class _SearchContext:
    problem: CrimpProblem
    strategy: Strategy
    s0_rows: tuple[Row, ...]
    w_columns: tuple[int, ...]
    products: tuple[tuple[tuple[Raw, ...], ...], ...]
    t_images: tuple[tuple[Raw, ...], ...]


def _base_subspace(problem: CrimpProblem) -> tuple[list[list[Raw]], list[int]]:
    ambient = problem.ambient
    rows = ambient.base_ring_rows() + ambient.filtration_rows(problem.delta)
    return rref(problem.field, rows)


def search_space_size(problem: CrimpProblem) -> int:
    """Number of candidate subspaces, the Gaussian binomial [(d-1) delta, delta]_q"""
    n = (problem.degree - 1) * problem.delta
    return gaussian_binomial(n, problem.delta, problem.field.characteristic)


def _context(problem: CrimpProblem, strategy: Strategy) -> _SearchContext:
    field = problem.field
    ambient = problem.ambient
    s0_rows, s0_pivots = _base_subspace(problem)
    taken = set(s0_pivots)
    w_columns = tuple(c for c in range(ambient.dimension) if c not in taken)

    def project(row):
        residue = reduce_vector(field, row, s0_rows, s0_pivots)
        return tuple(residue[c] for c in w_columns)

    hats = [ambient.basis_row(c // ambient.b, c % ambient.b) for c in w_columns]
    products = tuple(
        tuple(project(ambient.multiply(u, v)) for v in hats) for u in hats
    )
    t_images = tuple(project(ambient.times_t(u)) for u in hats)
    return _SearchContext(
        problem,
        strategy,
        tuple(tuple(r) for r in s0_rows),
        w_columns,
        products,
        t_images,
    )


def _annihilated(phi: list[list[int]], w: list[int], q: int) -> bool:
    for row in phi:
        if sum(a * b for a, b in zip(row, w)) % q:
            return False
    return True


def _combine(vectors, coefficients, n: int, q: int) -> list[int]:
    out = [0] * n
    for c, v in zip(coefficients, vectors):
        if c:
            for i in range(n):
                out[i] += c * v[i]
    return [x % q for x in out]


def _is_t_stable(ctx: _SearchContext, phi, kernel_basis, n: int, q: int) -> bool:
    return all(_annihilated(phi, _combine(ctx.t_images, k, n, q), q) for k in kernel_basis)


def _is_closed(ctx: _SearchContext, phi, kernel_basis, n: int, q: int) -> bool:
    for i in range(len(kernel_basis)):
        ki = kernel_basis[i]
        for j in range(i, len(kernel_basis)):
            kj = kernel_basis[j]
            out = [0] * n
            for a in range(n):
                if not ki[a]:
                    continue
                for b_ in range(n):
                    if kj[b_]:
                        coeff = ki[a] * kj[b_]
                        row = ctx.products[a][b_]
                        for m in range(n):
                            out[m] += coeff * row[m]
            if not _annihilated(phi, [x % q for x in out], q):
                return False
    return True


def _subspace_rows(ctx: _SearchContext, kernel_basis, dimension: int) -> list[list[Raw]]:
    rows = [list(r) for r in ctx.s0_rows]
    for k in kernel_basis:
        row = [0] * dimension
        for a, c in zip(ctx.w_columns, k):
            row[a] = c
        rows.append(row)
    return rows


def _search_shard(ctx: _SearchContext, pivots: tuple[int, ...]) -> list[tuple[Row, ...]]:
    """All crimps whose functional matrix has the given pivot columns"""
    problem = ctx.problem
    field = problem.field
    q = field.characteristic
    n = len(ctx.w_columns)
    dimension = problem.ambient.dimension
    found = []
    for phi in iter_rref_with_pivots(field, pivots, n):
        kernel_basis = kernel(field, phi, n)
        if not _is_t_stable(ctx, phi, kernel_basis, n, q):
            continue
        if ctx.strategy is Strategy.SUBALGEBRA_FIRST:
            if not _is_closed(ctx, phi, kernel_basis, n, q):
                continue
            rows = _subspace_rows(ctx, kernel_basis, dimension)
            if branch_valuation(lift_cover(problem, rows)) != problem.b:
                continue
        else:
            rows = _subspace_rows(ctx, kernel_basis, dimension)
            if lattice_branch_valuation(problem, rows) != problem.b:
                continue
            if not _is_closed(ctx, phi, kernel_basis, n, q):
                continue
        found.append(canonical_basis(field, rows))
    enumeration_logger.debug(f"Shard {pivots}: {len(found)} crimps")
    return found


def enumerate_crimps(
    problem: CrimpProblem,
    budget: int | None = None,
    workers: int | None = None,
    strategy: Strategy = Strategy.SUBALGEBRA_FIRST,
) -> list[CrimpSubalgebra]:
    """Every crimp of ``problem`` over its finite field, sorted by basis matrix"""
    field = problem.field
    if not field.is_finite:
        raise DomainError("Crimp enumeration needs a finite field", {"field": field.descriptor()})
    budget = settings.default_budget if budget is None else budget
    workers = settings.workers if workers is None else workers

    cardinality = search_space_size(problem)
    if cardinality > budget:
        enumeration_logger.warning(
            f"Refusing crimp search: {cardinality} candidates exceed budget {budget}"
        )
        raise BudgetExceededError(
            f"Search space of {cardinality} subspaces exceeds the budget of {budget}",
            cardinality,
            budget,
        )

    n = (problem.degree - 1) * problem.delta
    shards = list(itertools.combinations(range(n), problem.delta))
    ctx = _context(problem, strategy)
    enumeration_logger.info(
        f"Crimp search over {field}: d={problem.degree} a={problem.a} b={problem.b} "
        f"delta={problem.delta}, {cardinality} candidates in {len(shards)} shards"
    )
    results = map_shards(_search_shard, ctx, shards, workers)

    bases = sorted({basis for shard in results for basis in shard})
    enumeration_logger.info(f"Crimp search found {len(bases)} crimps ({strategy.value})")
    _logger.debug(f"Enumerated {len(bases)} crimps of {problem.descriptor()}")
    return [CrimpSubalgebra(problem, basis) for basis in bases]
