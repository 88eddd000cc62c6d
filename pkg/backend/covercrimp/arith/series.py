"""Truncated power series in k[t]/t^N"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, Union

from covercrimp.arith.field import Field, Raw
from covercrimp.errors import (
    DomainError,
    FieldMismatchError,
    NotInvertibleError,
    PrecisionExhaustedError,
)


@dataclass(frozen=True)
class AtLeast:
    """Valuation sentinel: every stored coefficient vanishes"""

    bound: int

    def __str__(self) -> str:
        return f"≥ {self.bound}"


Valuation = Union[int, AtLeast]


@dataclass(frozen=True)
class TruncatedSeries:
    """An element of k[t]/t^N

    ``coefficients[i]`` is the raw coefficient of t^i; exactly ``precision`` of them
    are stored.
    """

    field: Field
    coefficients: tuple[Raw, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise DomainError(f"Series precision must be positive, got {self.precision}")
        if len(self.coefficients) != self.precision:
            raise DomainError(
                f"Series stores {len(self.coefficients)} coefficients at precision {self.precision}"
            )

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_coefficients(
        cls, field: Field, coefficients: Iterable[Any], precision: int
    ) -> TruncatedSeries:
        """Build from any coefficient literals; extra terms are truncated, missing ones are 0"""
        raw = [field.coerce(c) for c in coefficients][:precision]
        raw.extend([field.zero] * (precision - len(raw)))
        return cls(field, tuple(raw), precision)

    @classmethod
    def zero(cls, field: Field, precision: int) -> TruncatedSeries:
        return cls(field, (field.zero,) * precision, precision)

    @classmethod
    def one(cls, field: Field, precision: int) -> TruncatedSeries:
        return cls.constant(field, 1, precision)

    @classmethod
    def constant(cls, field: Field, value: Any, precision: int) -> TruncatedSeries:
        return cls.monomial(field, value, 0, precision)

    @classmethod
    def monomial(cls, field: Field, value: Any, exponent: int, precision: int) -> TruncatedSeries:
        coeffs = [field.zero] * precision
        if exponent < precision:
            coeffs[exponent] = field.coerce(value)
        return cls(field, tuple(coeffs), precision)

    @classmethod
    def uniformizer(cls, field: Field, precision: int) -> TruncatedSeries:
        """The series t"""
        return cls.monomial(field, 1, 1, precision)

    # -- inspection ------------------------------------------------------------

    def coefficient(self, i: int) -> Raw:
        if i < 0 or i >= self.precision:
            raise PrecisionExhaustedError(
                f"Coefficient of t^{i} is not known at precision {self.precision}"
            )
        return self.coefficients[i]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def valuation(self) -> Valuation:
        return series_valuation(self)

    def exact_valuation(self) -> int:
        """Valuation as an integer; fails loudly when it is not visible below the precision"""
        v = series_valuation(self)
        if isinstance(v, AtLeast):
            raise PrecisionExhaustedError(
                f"Series vanishes to order >= {self.precision}; increase the precision",
                {"precision": self.precision},
            )
        return v

    def is_unit(self) -> bool:
        return self.coefficients[0] != 0

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other: Any) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot combine series over {self.field} and {other.field}"
                )
            return other
        return TruncatedSeries.constant(self.field, other, self.precision)

    def __add__(self, other: Any) -> TruncatedSeries:
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        add = self.field.add
        return TruncatedSeries(
            self.field,
            tuple(add(self.coefficients[i], other.coefficients[i]) for i in range(n)),
            n,
        )

    __radd__ = __add__

    def __sub__(self, other: Any) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> TruncatedSeries:
        return self._coerce(other) + (-self)

    def __neg__(self) -> TruncatedSeries:
        neg = self.field.neg
        return TruncatedSeries(self.field, tuple(neg(c) for c in self.coefficients), self.precision)

    def __mul__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(self._coerce(other).coefficients[0])

    __rmul__ = __mul__

    def scale(self, value: Raw) -> TruncatedSeries:
        """Multiply by a raw scalar of this field"""
        mul = self.field.mul
        return TruncatedSeries(
            self.field, tuple(mul(value, c) for c in self.coefficients), self.precision
        )

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by t^k, keeping the precision"""
        if k == 0:
            return self
        coeffs = (self.field.zero,) * k + self.coefficients[: max(self.precision - k, 0)]
        return TruncatedSeries(self.field, coeffs[: self.precision], self.precision)

    def shift_down(self, k: int) -> TruncatedSeries:
        """Divide by t^k when the first k coefficients vanish; precision drops by k"""
        if any(c != 0 for c in self.coefficients[:k]):
            raise NotInvertibleError(f"Series is not divisible by t^{k}")
        if k >= self.precision:
            raise PrecisionExhaustedError(
                f"Dividing by t^{k} exhausts precision {self.precision}",
                {"precision": self.precision},
            )
        return TruncatedSeries(self.field, self.coefficients[k:], self.precision - k)

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision > self.precision:
            raise PrecisionExhaustedError(
                f"Cannot raise precision from {self.precision} to {precision}",
                {"precision": self.precision},
            )
        return TruncatedSeries(self.field, self.coefficients[:precision], precision)

    def inverse(self) -> TruncatedSeries:
        """Inverse of a unit"""
        field = self.field
        c0 = self.coefficients[0]
        if c0 == 0:
            raise NotInvertibleError("Series with zero constant term is not a unit")
        inv_c0 = field.inv(c0)
        out = [inv_c0]
        for n in range(1, self.precision):
            acc = field.zero
            for k in range(1, n + 1):
                acc = field.add(acc, field.mul(self.coefficients[k], out[n - k]))
            out.append(field.neg(field.mul(inv_c0, acc)))
        return TruncatedSeries(field, tuple(out), self.precision)

    def divide_exact(self, other: TruncatedSeries) -> TruncatedSeries:
        """Quotient self / other, which must exist in k[[t]]; precision drops by val(other)"""
        other = self._coerce(other)
        v = other.exact_valuation()
        mine = self.valuation()
        if isinstance(mine, int) and mine < v:
            raise NotInvertibleError(
                f"t-adic valuation {mine} is below the divisor valuation {v}"
            )
        return series_mul(self.shift_down(v), other.shift_down(v).inverse())

    def power(self, n: int) -> TruncatedSeries:
        result = TruncatedSeries.one(self.field, self.precision)
        for _ in range(n):
            result = series_mul(result, self)
        return result

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            coeff = self.field.format(c)
            if i == 0:
                terms.append(coeff)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if coeff == "1" else f"{coeff}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.precision})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated at the smaller precision"""
    if a.field != b.field:
        raise FieldMismatchError(f"Cannot multiply series over {a.field} and {b.field}")
    field = a.field
    n = min(a.precision, b.precision)
    ac, bc = a.coefficients, b.coefficients
    if field.is_finite:
        q = field.characteristic
        out_int = [0] * n
        for i in range(n):
            ai = ac[i]
            if ai == 0:
                continue
            for j in range(n - i):
                if bc[j]:
                    out_int[i + j] += ai * bc[j]
        return TruncatedSeries(field, tuple(c % q for c in out_int), n)
    out = [field.zero] * n
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n - i):
            if bc[j]:
                out[i + j] += ai * bc[j]
    return TruncatedSeries(field, tuple(out), n)


def series_valuation(s: TruncatedSeries) -> Valuation:
    """Index of the first nonzero coefficient, or ``AtLeast(N)`` if none is stored"""
    for i, c in enumerate(s.coefficients):
        if c != 0:
            return i
    return AtLeast(s.precision)


