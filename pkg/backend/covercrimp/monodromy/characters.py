"""Character-theoretic counts of transposition tuples

For the transposition class, chi_lambda(tau) * C(d, 2) / f_lambda is the content
sum of lambda, so the number of tuples with product one is

    N_h(d, b) = (d!)^{2h-1} sum_lambda f_lambda^{2-2h} c(lambda)^b.

Connected counts follow by splitting off the orbit of the point 1.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from fractions import Fraction
from functools import lru_cache

from covercrimp.errors import DomainError

Partition = tuple[int, ...]


def partitions(d: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of d in decreasing lexicographic order"""
    if d == 0:
        yield ()
        return
    largest = d if largest is None else min(largest, d)
    for first in range(largest, 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def _conjugate(shape: Partition) -> Partition:
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0] if shape else 0))


def hook_lengths(shape: Partition) -> list[int]:
    columns = _conjugate(shape)
    return [
        (part - j) + (columns[j] - i) - 1
        for i, part in enumerate(shape)
        for j in range(part)
    ]


def dimension(shape: Partition) -> int:
    """f_lambda by the hook length formula"""
    return math.factorial(sum(shape)) // math.prod(hook_lengths(shape))


def content_sum(shape: Partition) -> int:
    return sum(j - i for i, part in enumerate(shape) for j in range(part))


@lru_cache(maxsize=None)
def frobenius_count(d: int, h: int, b: int) -> int:
    """Tuples (alpha, beta, tau_1..tau_b) with product one, transitive or not"""
    if d < 0 or h < 0 or b < 0:
        raise DomainError(f"Need nonnegative d, h, b, got d={d}, h={h}, b={b}")
    total = sum(
        Fraction(dimension(shape)) ** (2 - 2 * h) * Fraction(content_sum(shape)) ** b
        for shape in partitions(d)
    )
    count = Fraction(math.factorial(d)) ** (2 * h - 1) * total
    assert count.denominator == 1, "character sum is an integer"
    return int(count)


@lru_cache(maxsize=None)
def connected_frobenius_count(d: int, h: int, b: int) -> int:
    """Transitive tuples, removing those where the orbit of 1 is a proper block of size k"""
    if d < 1:
        raise DomainError(f"Degree must be positive, got {d}")
    out = frobenius_count(d, h, b)
    for k in range(1, d):
        ways = 0
        for j in range(b + 1):
            ways += math.comb(b, j) * connected_frobenius_count(k, h, j) * frobenius_count(
                d - k, h, b - j
            )
        out -= math.comb(d - 1, k - 1) * ways
    return out
