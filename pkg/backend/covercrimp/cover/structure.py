"""Structure constants of a rank-d commutative algebra with marked basis"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from covercrimp.arith.field import Field
from covercrimp.arith.series import TruncatedSeries, series_mul
from covercrimp.errors import DimensionMismatchError, FieldMismatchError

Vector = tuple[TruncatedSeries, ...]


@dataclass(frozen=True)
class BaseRing:
    """Either the scalar field k (``precision is None``) or k[t]/t^N"""

    field: Field
    precision: int | None = None

    @property
    def is_field(self) -> bool:
        return self.precision is None

    @property
    def series_precision(self) -> int:
        """Precision used to store elements; the field is stored as k[t]/t"""
        return 1 if self.precision is None else self.precision

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.field, self.series_precision)

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.field, self.series_precision)

    def element(self, literal: Any) -> TruncatedSeries:
        """A base-ring element from a scalar literal or a coefficient list"""
        if isinstance(literal, TruncatedSeries):
            return literal.truncate(self.series_precision)
        if isinstance(literal, (list, tuple)):
            return TruncatedSeries.from_coefficients(self.field, literal, self.series_precision)
        return TruncatedSeries.constant(self.field, literal, self.series_precision)

    def descriptor(self) -> dict[str, Any]:
        return {"field": self.field.descriptor(), "precision": self.precision}


@dataclass(frozen=True)
class StructureConstants:
    """The datum (c_ij^k, d_i): e_i * e_j = sum_k c_ij^k e_k and 1 = sum_i d_i e_i"""

    degree: int
    base: BaseRing
    unit: Vector
    constants: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        d = self.degree
        if d < 1:
            raise DimensionMismatchError(f"Algebra degree must be positive, got {d}")
        if len(self.unit) != d:
            raise DimensionMismatchError(f"Unit has {len(self.unit)} coordinates, expected {d}")
        if len(self.constants) != d or any(
            len(row) != d or any(len(v) != d for v in row) for row in self.constants
        ):
            raise DimensionMismatchError(f"Structure constants must have shape {d}x{d}x{d}")
        n = self.base.series_precision
        for entry in self._entries():
            if entry.field != self.base.field:
                raise FieldMismatchError(
                    f"Entry over {entry.field} in a table over {self.base.field}"
                )
            if entry.precision != n:
                raise DimensionMismatchError(
                    f"Entry precision {entry.precision} differs from base precision {n}"
                )

    def _entries(self):
        yield from self.unit
        for row in self.constants:
            for v in row:
                yield from v

    @classmethod
    def from_literals(
        cls,
        base: BaseRing,
        unit: Sequence[Any],
        constants: Sequence[Sequence[Sequence[Any]]],
    ) -> StructureConstants:
        return cls(
            len(unit),
            base,
            tuple(base.element(u) for u in unit),
            tuple(tuple(tuple(base.element(c) for c in v) for v in row) for row in constants),
        )

    @property
    def field(self) -> Field:
        return self.base.field

    def basis_vector(self, i: int) -> Vector:
        zero, one = self.base.zero(), self.base.one()
        return tuple(one if k == i else zero for k in range(self.degree))

    def multiply(self, a: Sequence[TruncatedSeries], b: Sequence[TruncatedSeries]) -> Vector:
        """Product of two elements given by coordinates"""
        d = self.degree
        n = min([self.base.series_precision] + [x.precision for x in a] + [x.precision for x in b])
        out = [TruncatedSeries.zero(self.field, n) for _ in range(d)]
        for i in range(d):
            if a[i].is_zero():
                continue
            for j in range(d):
                if b[j].is_zero():
                    continue
                ab = series_mul(a[i], b[j])
                for k in range(d):
                    c = self.constants[i][j][k]
                    if not c.is_zero():
                        out[k] = out[k] + series_mul(ab, c)
        return tuple(out)

    def traces(self) -> Vector:
        """tr(e_m) = sum_j c_mj^j, the trace of multiplication by e_m"""
        d = self.degree
        out = []
        for m in range(d):
            acc = self.base.zero()
            for j in range(d):
                acc = acc + self.constants[m][j][j]
            out.append(acc)
        return tuple(out)

    def trace(self, a: Sequence[TruncatedSeries]) -> TruncatedSeries:
        acc = TruncatedSeries.zero(self.field, min(x.precision for x in a))
        for coeff, tr in zip(a, self.traces()):
            acc = acc + series_mul(coeff, tr)
        return acc

    def with_precision(self, precision: int) -> StructureConstants:
        """The same table truncated to a lower precision"""
        base = BaseRing(self.field, precision)
        return StructureConstants(
            self.degree,
            base,
            tuple(u.truncate(precision) for u in self.unit),
            tuple(
                tuple(tuple(c.truncate(precision) for c in v) for v in row)
                for row in self.constants
            ),
        )


@dataclass(frozen=True)
class Violation:
    """One failed identity of the algebra axioms"""

    kind: str
    indices: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": [
                {"kind": v.kind, "indices": list(v.indices), "detail": v.detail}
                for v in self.violations
            ],
        }


def validate_algebra(table: StructureConstants) -> ValidationReport:
    """Check commutativity, associativity on all basis triples and the two-sided unit

    Every violated identity is reported; nothing is raised.
    """
    d = table.degree
    c = table.constants
    violations: list[Violation] = []

    for i in range(d):
        for j in range(i + 1, d):
            for k in range(d):
                if c[i][j][k] != c[j][i][k]:
                    violations.append(
                        Violation(
                            "commutativity",
                            (i, j, k),
                            f"c[{i}][{j}][{k}] = {c[i][j][k]} but c[{j}][{i}][{k}] = {c[j][i][k]}",
                        )
                    )

    basis = [table.basis_vector(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for l in range(d):  # noqa: E741
                left = table.multiply(c[i][j], basis[l])
                right = table.multiply(basis[i], c[j][l])
                for k in range(d):
                    if left[k] != right[k]:
                        violations.append(
                            Violation(
                                "associativity",
                                (i, j, l),
                                f"((e{i} e{j}) e{l})_{k} = {left[k]} "
                                f"but (e{i} (e{j} e{l}))_{k} = {right[k]}",
                            )
                        )
                        break

    for i in range(d):
        if table.multiply(table.unit, basis[i]) != basis[i]:
            violations.append(Violation("unit", (i,), f"1 * e{i} != e{i}"))
        if table.multiply(basis[i], table.unit) != basis[i]:
            violations.append(Violation("unit", (i,), f"e{i} * 1 != e{i}"))

    return ValidationReport(tuple(violations))
