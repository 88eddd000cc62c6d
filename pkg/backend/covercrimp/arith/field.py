"""Scalar fields: the rationals and prime fields F_q

Field elements are stored raw (``Fraction`` for the rationals, an ``int`` in
``[0, q)`` for F_q) and the field object carries the arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from sympy import isprime

from covercrimp.constants import ArithmeticConstants
from covercrimp.errors import DomainError, SchemaError

Raw = Union[int, Fraction]

_FQ_PATTERN = re.compile(r"^(?:F|GF|Fq:?)\(?(\d+)\)?$", re.IGNORECASE)


@dataclass(frozen=True)
class Field:
    """Prime field F_q (``characteristic = q``) or the rationals (``characteristic = 0``)"""

    characteristic: int

    def __post_init__(self):
        q = self.characteristic
        if q == 0:
            return
        if q < 2 or q > ArithmeticConstants.MAX_PRIME or not isprime(q):
            raise DomainError(f"F_q requires a prime q <= 2^31, got {q}")

    @classmethod
    def rationals(cls) -> Field:
        return cls(0)

    @classmethod
    def finite(cls, q: int) -> Field:
        return cls(q)

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> int | None:
        return self.characteristic or None

    @property
    def label(self) -> str:
        return f"F{self.characteristic}" if self.is_finite else "QQ"

    def __str__(self) -> str:
        return self.label

    # -- element construction -------------------------------------------------

    @property
    def zero(self) -> Raw:
        return 0 if self.is_finite else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.is_finite else Fraction(1)

    def coerce(self, value: Any) -> Raw:
        """Convert an int, Fraction or string to a raw element of this field"""
        if isinstance(value, bool):
            raise SchemaError(f"Boolean is not a field element: {value!r}")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            return value % self.characteristic if self.is_finite else Fraction(value)
        if isinstance(value, Fraction):
            if not self.is_finite:
                return value
            den = value.denominator % self.characteristic
            if den == 0:
                raise DomainError(f"{value} has no image in {self}")
            return value.numerator * pow(den, -1, self.characteristic) % self.characteristic
        raise SchemaError(f"Cannot interpret {value!r} as an element of {self}")

    def parse(self, text: str) -> Raw:
        """Parse ``"n"`` or ``"p/q"``"""
        try:
            fraction = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise SchemaError(f"Invalid scalar literal: {text!r}") from err
        return self.coerce(fraction)

    def format(self, value: Raw) -> str:
        return str(value)

    def elements(self) -> range:
        if not self.is_finite:
            raise DomainError("The rationals cannot be enumerated")
        return range(self.characteristic)

    # -- arithmetic on raw values ---------------------------------------------

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.is_finite:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.is_finite:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Raw) -> Raw:
        if self.is_finite:
            return -a % self.characteristic
        return -a

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.is_finite:
            return a * b % self.characteristic
        return a * b

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        if self.is_finite:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def power(self, a: Raw, n: int) -> Raw:
        if self.is_finite:
            return pow(a, n, self.characteristic)
        return a**n

    def is_invertible_integer(self, n: int) -> bool:
        """Whether the integer n is a unit in this field"""
        return not self.is_finite or n % self.characteristic != 0

    def roots_of_unity(self, n: int) -> list[Raw]:
        """The n-th roots of unity that lie in this field"""
        if self.is_finite:
            return [z for z in range(1, self.characteristic) if pow(z, n, self.characteristic) == 1]
        return [Fraction(1)] if n % 2 else [Fraction(1), Fraction(-1)]

    # -- descriptors -----------------------------------------------------------

    def descriptor(self) -> str | dict[str, int]:
        return {"Fq": self.characteristic} if self.is_finite else "rational"


def parse_field(spec: Any) -> Field:
    """Parse a field descriptor: ``"rational"``, ``"QQ"``, ``"F7"``, ``{"Fq": 7}`` or ``7``"""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, dict):
        if set(spec) != {"Fq"}:
            raise SchemaError(f"Field descriptor must be 'rational' or {{'Fq': q}}, got {spec!r}")
        return parse_field(spec["Fq"])
    if isinstance(spec, bool):
        raise SchemaError(f"Invalid field descriptor: {spec!r}")
    if isinstance(spec, int):
        return Field.finite(spec)
    if isinstance(spec, str):
        text = spec.strip()
        if text.lower() in {"rational", "rationals", "q", "qq"}:
            return Field.rationals()
        if text.isdigit():
            return Field.finite(int(text))
        match = _FQ_PATTERN.match(text)
        if match:
            return Field.finite(int(match.group(1)))
    raise SchemaError(f"Invalid field descriptor: {spec!r}")
