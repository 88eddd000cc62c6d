"""Canonical JSON output and literal parsing shared by the commands"""

import json
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from covercrimp.arith.field import Field, parse_field
from covercrimp.arith.series import AtLeast, TruncatedSeries, Valuation
from covercrimp.errors import FieldMismatchError, SchemaError


def _default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, AtLeast):
        return {"at_least": value.bound}
    if isinstance(value, (tuple, set, frozenset)):
        return list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def canonical_json(report: Any) -> str:
    """Sorted keys, no whitespace, trailing newline; identical input gives identical bytes"""
    return (
        json.dumps(
            report,
            sort_keys=True,
            separators=(",", ":"),
            ensure_ascii=False,
            default=_default,
        )
        + "\n"
    )


def to_table(report: dict[str, Any]) -> str:
    """One ``key: value`` line per top-level key, nested values as compact JSON"""
    width = max((len(k) for k in report), default=0)
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, str):
            text = value
        else:
            text = canonical_json(value).rstrip("\n")
        lines.append(f"{key.ljust(width)}  {text}")
    return "\n".join(lines) + "\n"


def series_to_dict(series: TruncatedSeries) -> dict[str, Any]:
    field = series.field
    return {
        "coefficients": [field.format(c) for c in series.coefficients],
        "field": field.descriptor(),
        "precision": series.precision,
    }


def valuation_to_json(valuation: Valuation) -> int | dict[str, int]:
    if isinstance(valuation, AtLeast):
        return {"at_least": valuation.bound}
    return valuation


def parse_series(literal: Any, field: Field, precision: int) -> TruncatedSeries:
    """A series from a scalar, a coefficient list or a series document

    A series document may name its own field, which must agree with ``field``,
    and its own precision, which caps ``precision``.
    """
    if isinstance(literal, TruncatedSeries):
        return literal.truncate(min(literal.precision, precision))
    if isinstance(literal, dict):
        if "coefficients" not in literal:
            raise SchemaError(f"Series document needs 'coefficients': {literal!r}")
        if literal.get("field") is not None and parse_field(literal["field"]) != field:
            raise FieldMismatchError(
                f"Series over {parse_field(literal['field'])} used in a job over {field}"
            )
        own = literal.get("precision")
        n = precision if own is None else min(int(own), precision)
        return TruncatedSeries.from_coefficients(field, literal["coefficients"], n)
    if isinstance(literal, (list, tuple)):
        return TruncatedSeries.from_coefficients(field, literal, precision)
    return TruncatedSeries.constant(field, literal, precision)


def parse_series_list(
    literals: Sequence[Any], field: Field, precision: int
) -> list[TruncatedSeries]:
    return [parse_series(x, field, precision) for x in literals]
