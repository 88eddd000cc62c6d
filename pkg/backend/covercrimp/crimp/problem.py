"""Normalizations and crimping problems over a disk"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from covercrimp.arith.field import Field
from covercrimp.arith.matrix import SeriesMatrix
from covercrimp.arith.series import TruncatedSeries
from covercrimp.cover.disk_cover import DiskCover, branch_valuation
from covercrimp.cover.structure import BaseRing, StructureConstants
from covercrimp.crimp.ambient import CrimpAmbient
from covercrimp.errors import (
    CharacteristicError,
    DomainError,
    NotInvertibleError,
    ParityError,
    PrecisionExhaustedError,
)

_logger = logging.getLogger(__name__)


def crimp_delta(a: int, b: int) -> int:
    """Length of the crimp, (b - a)/2"""
    if b < a:
        raise DomainError(
            f"Target branch valuation {b} is below the normalization's {a}", {"a": a, "b": b}
        )
    if (b - a) % 2:
        raise ParityError(
            f"b - a = {b - a} is odd; the crimp space is empty", {"a": a, "b": b}
        )
    return (b - a) // 2


@dataclass(frozen=True)
class Automorphism:
    """An algebra automorphism over the base, as the matrix whose columns are the images of e_i"""

    matrix: SeriesMatrix
    label: str = ""

    def apply(self, vector: Sequence[TruncatedSeries]) -> tuple[TruncatedSeries, ...]:
        n = min(v.precision for v in vector)
        if self.matrix.precision > n:
            return _truncate_matrix(self.matrix, n).apply(vector)
        return self.matrix.apply(vector)


def _truncate_matrix(matrix: SeriesMatrix, precision: int) -> SeriesMatrix:
    return SeriesMatrix.from_rows([[e.truncate(precision) for e in row] for row in matrix.entries])


def check_automorphism(table: StructureConstants, automorphism: Automorphism) -> None:
    """Raise unless ``automorphism`` fixes the unit and respects every basis product"""
    d = table.degree
    matrix = automorphism.matrix
    if matrix.rows != d or matrix.cols != d:
        raise DomainError(f"Automorphism {automorphism.label!r} is not {d}x{d}")
    n = min(matrix.precision, table.base.series_precision)
    if n < table.base.series_precision:
        table = table.with_precision(n)
    matrix = _truncate_matrix(matrix, n)
    try:
        matrix.inverse()
    except NotInvertibleError as err:
        raise DomainError(f"Automorphism {automorphism.label!r} is not invertible") from err
    if matrix.apply(table.unit) != table.unit:
        raise DomainError(f"Automorphism {automorphism.label!r} does not fix the unit")
    images = [matrix.column(i) for i in range(d)]
    for i in range(d):
        for j in range(i, d):
            if matrix.apply(table.constants[i][j]) != table.multiply(images[i], images[j]):
                raise DomainError(
                    f"Automorphism {automorphism.label!r} does not respect e{i} * e{j}",
                    {"pair": [i, j]},
                )


def _ramified_table(field: Field, profile: Sequence[int], precision: int) -> StructureConstants:
    """prod_i k[[s_i]] with s_i^e_i = t, basis s_i^r for r < e_i"""
    base = BaseRing(field, precision)
    d = sum(profile)
    zero, one = base.zero(), base.one()
    t = TruncatedSeries.uniformizer(field, precision)
    constants = [[[zero] * d for _ in range(d)] for _ in range(d)]
    unit = [zero] * d
    offset = 0
    for e in profile:
        unit[offset] = one
        for r in range(e):
            for r2 in range(e):
                total = r + r2
                if total < e:
                    constants[offset + r][offset + r2][offset + total] = one
                else:
                    constants[offset + r][offset + r2][offset + total - e] = t
        offset += e
    return StructureConstants(
        d,
        base,
        tuple(unit),
        tuple(tuple(tuple(v) for v in row) for row in constants),
    )


def _profile_automorphisms(
    field: Field, profile: Sequence[int], precision: int, galois: bool
) -> tuple[Automorphism, ...]:
    """Factor permutations preserving ramification, optionally with s_i -> zeta s_i"""
    d = sum(profile)
    offsets = list(itertools.accumulate([0, *profile[:-1]]))
    zeta_choices = [field.roots_of_unity(e) if galois else [field.one] for e in profile]
    zero = TruncatedSeries.zero(field, precision)
    out = []
    for perm in itertools.permutations(range(len(profile))):
        if any(profile[perm[i]] != profile[i] for i in range(len(profile))):
            continue
        for zetas in itertools.product(*zeta_choices):
            entries = [[zero] * d for _ in range(d)]
            for i, e in enumerate(profile):
                for r in range(e):
                    value = field.power(zetas[i], r)
                    entries[offsets[perm[i]] + r][offsets[i] + r] = TruncatedSeries.constant(
                        field, value, precision
                    )
            label = "perm" + "".join(str(p) for p in perm)
            if galois:
                label += "-zeta" + ",".join(str(z) for z in zetas)
            out.append(
                Automorphism(SeriesMatrix(d, d, tuple(tuple(r) for r in entries)), label)
            )
    return tuple(out)


@dataclass(frozen=True)
class NormalizationData:
    """A normal cover of the disk with its branch valuation and automorphism group

    ``ramification`` records the profile (e_1, ..., e_r) when the cover is the
    standard prod k[[s_i]], s_i^e_i = t; such normalizations can be rebuilt at
    any precision.
    """

    cover: DiskCover
    branch_valuation: int
    automorphisms: tuple[Automorphism, ...]
    ramification: tuple[int, ...] | None = None
    galois: bool = False

    @classmethod
    def from_ramification(
        cls,
        field: Field,
        profile: Sequence[int],
        precision: int | None = None,
        galois: bool = False,
    ) -> NormalizationData:
        profile = tuple(int(e) for e in profile)
        if not profile or any(e < 1 for e in profile):
            raise DomainError(f"Ramification profile must be positive integers, got {profile}")
        wild = [e for e in profile if not field.is_invertible_integer(e)]
        if wild:
            raise CharacteristicError(
                f"Ramification indices {wild} are divisible by the characteristic of {field}",
                {"profile": list(profile)},
            )
        a = sum(e - 1 for e in profile)
        precision = precision or a + 1
        table = _ramified_table(field, profile, precision)
        cover = DiskCover(table, generically_etale=True, label=f"normalization{list(profile)}")
        return cls(
            cover,
            a,
            _profile_automorphisms(field, profile, precision, galois),
            profile,
            galois,
        )

    @classmethod
    def split(cls, field: Field, degree: int, precision: int | None = None) -> NormalizationData:
        """R^d with the full symmetric group"""
        return cls.from_ramification(field, (1,) * degree, precision)

    @classmethod
    def ramified_disk(
        cls, field: Field, e: int = 2, precision: int | None = None, galois: bool = False
    ) -> NormalizationData:
        return cls.from_ramification(field, (e,), precision, galois)

    @classmethod
    def from_cover(
        cls, cover: DiskCover, automorphisms: Sequence[Automorphism] = ()
    ) -> NormalizationData:
        """An asserted-normal table with explicitly supplied automorphisms"""
        cover.require_valid()
        for automorphism in automorphisms:
            check_automorphism(cover.table, automorphism)
        a = branch_valuation(cover)
        identity = Automorphism(
            SeriesMatrix.identity(cover.field, cover.degree, cover.precision), "identity"
        )
        return cls(cover, a, (identity, *automorphisms))

    @property
    def field(self) -> Field:
        return self.cover.field

    @property
    def degree(self) -> int:
        return self.cover.degree

    @property
    def is_split(self) -> bool:
        return self.ramification is not None and all(e == 1 for e in self.ramification)

    @property
    def kind(self) -> str:
        if self.is_split:
            return "split"
        if self.ramification is not None:
            return "ramified" if len(self.ramification) == 1 else "profile"
        return "table"

    def at_precision(self, precision: int) -> NormalizationData:
        """The same normalization with its table stored at ``precision``"""
        if precision == self.cover.precision:
            return self
        if self.ramification is not None:
            table = _ramified_table(self.field, self.ramification, precision)
            automorphisms = _profile_automorphisms(
                self.field, self.ramification, precision, self.galois
            )
        elif precision < self.cover.precision:
            table = self.cover.table.with_precision(precision)
            automorphisms = tuple(
                Automorphism(_truncate_matrix(a.matrix, precision), a.label)
                for a in self.automorphisms
            )
        else:
            raise PrecisionExhaustedError(
                f"Normalization table is known to precision {self.cover.precision}, "
                f"{precision} is needed",
                {"precision": self.cover.precision, "required": precision},
            )
        cover = DiskCover(
            table, generically_etale=self.cover.generically_etale, label=self.cover.label
        )
        return NormalizationData(
            cover, self.branch_valuation, automorphisms, self.ramification, self.galois
        )

    def descriptor(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "ramification": list(self.ramification) if self.ramification else None,
            "branch_valuation": self.branch_valuation,
            "automorphisms": len(self.automorphisms),
        }


@dataclass(frozen=True)
class CrimpProblem:
    """Crimps of ``normalization`` with branch divisor t^b"""

    normalization: NormalizationData
    b: int
    precision: int | None = None

    def __post_init__(self):
        if self.b < 1:
            raise DomainError(f"Target branch valuation must be positive, got {self.b}")
        crimp_delta(self.normalization.branch_valuation, self.b)
        if self.precision is not None and self.precision <= self.b:
            raise PrecisionExhaustedError(
                f"Working precision {self.precision} must exceed b = {self.b}",
                {"precision": self.precision, "b": self.b},
            )

    @property
    def a(self) -> int:
        return self.normalization.branch_valuation

    @property
    def delta(self) -> int:
        return crimp_delta(self.a, self.b)

    @property
    def field(self) -> Field:
        return self.normalization.field

    @property
    def degree(self) -> int:
        return self.normalization.degree

    @property
    def working_precision(self) -> int:
        """Precision for lifting; the lift loses delta digits to the index [O~ : O]"""
        return max(self.precision or 0, self.b + self.delta + 1)

    @cached_property
    def ambient(self) -> CrimpAmbient:
        return CrimpAmbient(self.normalization.at_precision(self.b))

    @cached_property
    def lifting_normalization(self) -> NormalizationData:
        return self.normalization.at_precision(self.working_precision)

    def descriptor(self) -> dict[str, Any]:
        return {
            "normalization": self.normalization.descriptor(),
            "a": self.a,
            "b": self.b,
            "delta": self.delta,
            "field": self.field.descriptor(),
            "precision": self.working_precision,
        }
