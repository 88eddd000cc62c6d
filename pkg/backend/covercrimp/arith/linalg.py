"""Dense exact linear algebra over a scalar field

Vectors and matrices are tuples/lists of raw field values (see ``Field``).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence

from covercrimp.arith.field import Field, Raw

Row = tuple[Raw, ...]


def rref(field: Field, rows: Sequence[Sequence[Raw]]) -> tuple[list[list[Raw]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns"""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def canonical_basis(field: Field, rows: Sequence[Sequence[Raw]]) -> tuple[Row, ...]:
    """The RREF basis of the row space, a canonical name for the subspace"""
    reduced, _ = rref(field, rows)
    return tuple(tuple(r) for r in reduced)


def rank(field: Field, rows: Sequence[Sequence[Raw]]) -> int:
    return len(rref(field, rows)[1])


def reduce_vector(
    field: Field, vector: Sequence[Raw], basis: Sequence[Sequence[Raw]], pivots: Sequence[int]
) -> list[Raw]:
    """Residue of ``vector`` modulo the span of an RREF basis"""
    v = list(vector)
    for row, p in zip(basis, pivots):
        coeff = v[p]
        if coeff != 0:
            v = [field.sub(x, field.mul(coeff, y)) for x, y in zip(v, row)]
    return v


def in_span(
    field: Field, vector: Sequence[Raw], basis: Sequence[Sequence[Raw]], pivots: Sequence[int]
) -> bool:
    return all(x == 0 for x in reduce_vector(field, vector, basis, pivots))


def kernel(field: Field, rows: Sequence[Sequence[Raw]], ncols: int) -> list[list[Raw]]:
    """Basis of {x : M x = 0}"""
    reduced, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, p in zip(reduced, pivots):
            x[p] = field.neg(row[f])
        basis.append(x)
    return basis


def extend_to_basis(
    field: Field, sub_rows: Sequence[Sequence[Raw]], rows: Sequence[Sequence[Raw]]
) -> list[list[Raw]]:
    """Members of ``rows`` extending a basis of span(sub_rows) to one of span(sub_rows + rows)"""
    basis, pivots = rref(field, sub_rows)
    chosen = []
    for r in rows:
        residue = reduce_vector(field, r, basis, pivots)
        if any(x != 0 for x in residue):
            chosen.append(list(r))
            basis, pivots = rref(field, list(basis) + [residue])
    return chosen


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n"""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def free_positions(pivots: Sequence[int], n: int) -> list[tuple[int, int]]:
    """(row, column) slots that are free in an RREF matrix with the given pivots"""
    pivot_set = set(pivots)
    return [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]


def iter_rref_with_pivots(
    field: Field, pivots: Sequence[int], n: int
) -> Iterator[list[list[Raw]]]:
    slots = free_positions(pivots, n)
    k = len(pivots)
    for values in itertools.product(field.elements(), repeat=len(slots)):
        m = [[0] * n for _ in range(k)]
        for r, p in enumerate(pivots):
            m[r][p] = 1
        for (r, c), v in zip(slots, values):
            m[r][c] = v
        yield m
