"""Permutations of {0, ..., d-1} as one-line image tuples

``p[i]`` is the image of i. Products compose right to left: ``compose(p, q)``
is p after q, so a word sigma_1 sigma_2 ... applies its last letter first.
Cycle notation is 1-based: ``"(1 2)(3 4)"``, ``"()"`` for the identity.
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Iterator, Sequence

from covercrimp.errors import SchemaError

Perm = tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q"""
    return tuple(p[q[i]] for i in range(len(q)))


def product(perms: Sequence[Perm], d: int) -> Perm:
    out = identity(d)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def commutator(a: Perm, b: Perm) -> Perm:
    """a b a^-1 b^-1"""
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def conjugate(p: Perm, g: Perm) -> Perm:
    """g p g^-1"""
    return compose(compose(g, p), inverse(g))


def transposition(d: int, i: int, j: int) -> Perm:
    out = list(range(d))
    out[i], out[j] = j, i
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycles including fixed points, each starting at its smallest element"""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p[i]
        out.append(tuple(cycle))
    return out


def cycle_count(p: Perm) -> int:
    return len(cycles(p))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included"""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def length(p: Perm) -> int:
    """Minimal number of transpositions with product p, d - #cycles"""
    return len(p) - cycle_count(p)


def sign(p: Perm) -> int:
    return -1 if length(p) % 2 else 1


def order(p: Perm) -> int:
    """Multiplicative order, the lcm of the cycle lengths"""
    return math.lcm(*(len(c) for c in cycles(p))) if p else 1


def all_permutations(d: int) -> Iterator[Perm]:
    return itertools.permutations(range(d))


def conjugacy_class(shape: Sequence[int], d: int) -> list[Perm]:
    """Every permutation of S_d with cycle type ``shape`` (fixed points may be omitted)"""
    target = normalize_cycle_type(shape, d)
    return [p for p in all_permutations(d) if cycle_type(p) == target]


def normalize_cycle_type(shape: Sequence[int], d: int) -> tuple[int, ...]:
    parts = [int(x) for x in shape if int(x) != 1]
    if any(x < 1 for x in parts) or sum(parts) > d:
        raise SchemaError(f"Cycle type {list(shape)} does not fit in S_{d}")
    parts.extend([1] * (d - sum(parts)))
    return tuple(sorted(parts, reverse=True))


def transpositions(d: int) -> list[Perm]:
    return [transposition(d, i, j) for i in range(d) for j in range(i + 1, d)]


def parse_cycles(text: str, d: int) -> Perm:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4 5)"``"""
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise SchemaError(f"Invalid cycle notation: {text!r}")
    out = list(range(d))
    seen: set[int] = set()
    for body in _CYCLE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            points = [int(tok) - 1 for tok in tokens]
        except ValueError as err:
            raise SchemaError(f"Invalid cycle notation: {text!r}") from err
        for x in points:
            if not 0 <= x < d:
                raise SchemaError(f"Point {x + 1} of {text!r} is outside 1..{d}")
            if x in seen:
                raise SchemaError(f"Cycles of {text!r} are not disjoint")
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            out[a] = b
    return tuple(out)


def format_cycles(p: Perm) -> str:
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in parts)


def from_images(images: Sequence[int]) -> Perm:
    """Permutation from 1-based one-line images"""
    p = tuple(int(x) - 1 for x in images)
    if not is_perm(p):
        raise SchemaError(f"Not a permutation: {list(images)}")
    return p


def parse_perm(value: str | Sequence[int], d: int) -> Perm:
    """Cycle notation string or 1-based one-line image list"""
    if isinstance(value, str):
        return parse_cycles(value, d)
    p = from_images(value)
    if len(p) != d:
        raise SchemaError(f"Permutation {list(value)} is not in S_{d}")
    return p
