"""Independent discriminant oracle through sympy resultants

Coefficients are lifted to integers/rationals, the classical discriminant
(-1)^(d(d-1)/2) Res(f, f') is computed in Q[t], and the result is reduced back
into the field of the cover.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import sympy as sp

from covercrimp.arith.series import TruncatedSeries, Valuation, series_valuation

_T, _X = sp.symbols("t x")


def _lift(series: TruncatedSeries) -> sp.Expr:
    terms = []
    for i, c in enumerate(series.coefficients):
        if c == 0:
            continue
        if isinstance(c, Fraction):
            value = sp.Rational(c.numerator, c.denominator)
        else:
            value = sp.Integer(c)
        terms.append(value * _T**i)
    return sp.Add(*terms)


def resultant_discriminant(coefficients: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """Discriminant of the monic polynomial with the given ascending coefficients"""
    field = coefficients[0].field
    n = min(c.precision for c in coefficients)
    d = len(coefficients) - 1
    f = sp.Add(*[_lift(c) * _X**k for k, c in enumerate(coefficients)])
    res = sp.resultant(f, sp.diff(f, _X), _X)
    disc = sp.Poly(sp.expand((-1) ** (d * (d - 1) // 2) * res), _T)
    coeffs = [Fraction(0)] * n
    for (power,), value in disc.as_dict().items():
        if power < n:
            coeffs[power] = Fraction(int(value.p), int(value.q))
    return TruncatedSeries.from_coefficients(field, coeffs, n)


def resultant_valuation(coefficients: Sequence[TruncatedSeries]) -> Valuation:
    return series_valuation(resultant_discriminant(coefficients))
