"""Weighted stability, its walls and the Riemann-Hurwitz formula"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from covercrimp.curves.marked_curve import (
    MarkedNodalCurve,
    StabilityParams,
    omega_epsilon_degrees,
)
from covercrimp.errors import DomainError, ParityError


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    reason: str | None
    degrees: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return self.stable

    def to_dict(self) -> dict[str, Any]:
        return {
            "stable": self.stable,
            "reason": self.reason,
            "degrees": [str(x) for x in self.degrees],
        }


def is_epsilon_stable(curve: MarkedNodalCurve, params: StabilityParams) -> StabilityReport:
    """eps * m <= 1 for every marking and omega(eps Sigma) has positive degree on every component"""
    degrees = omega_epsilon_degrees(curve, params)
    if not curve.is_connected():
        return StabilityReport(False, "dual graph is disconnected", degrees)
    eps = params.epsilon
    for index, marking in enumerate(curve.markings):
        if eps * marking.mult > 1:
            return StabilityReport(
                False,
                f"marking {index} has eps * mult = {eps * marking.mult} > 1",
                degrees,
            )
    for i, degree in enumerate(degrees):
        if degree <= 0:
            return StabilityReport(
                False, f"component {i} has omega_eps degree {degree} <= 0", degrees
            )
    return StabilityReport(True, None, degrees)


def stability_thresholds(curve: MarkedNodalCurve) -> list[Fraction]:
    """Values of eps in (0, 1] where some eps * m = 1 or some component degree vanishes"""
    walls: set[Fraction] = set()
    for marking in curve.markings:
        walls.add(Fraction(1, marking.mult))
    mults = curve.marking_multiplicities()
    for g, n, m in zip(curve.components, curve.node_branches(), mults):
        if m == 0:
            continue
        wall = Fraction(-(2 * g - 2 + n), m)
        if 0 < wall <= 1:
            walls.add(wall)
    return sorted(walls)


@dataclass(frozen=True)
class StabilityChamber:
    """Open interval (lower, upper) of weights, or the single wall lower == upper"""

    lower: Fraction
    upper: Fraction
    stable: bool

    @property
    def is_wall(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict[str, Any]:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "stable": self.stable,
            "wall": self.is_wall,
        }


def stability_chambers(curve: MarkedNodalCurve) -> list[StabilityChamber]:
    """Stability on every open chamber between thresholds and on every wall in (0, 1]"""
    walls = stability_thresholds(curve)
    if not walls or walls[-1] != 1:
        walls.append(Fraction(1))
    out = []
    lower = Fraction(0)
    for wall in walls:
        mid = StabilityParams((lower + wall) / 2)
        out.append(StabilityChamber(lower, wall, is_epsilon_stable(curve, mid).stable))
        out.append(
            StabilityChamber(wall, wall, is_epsilon_stable(curve, StabilityParams(wall)).stable)
        )
        lower = wall
    return out


def hassett_nonempty(h: int, b: int, params: StabilityParams) -> bool:
    """Whether a smooth genus-h curve with b simple markings has eps * b + 2h - 2 > 0"""
    if h < 0 or b < 0:
        raise DomainError(f"h and b must be nonnegative, got h={h}, b={b}")
    (degree,) = omega_epsilon_degrees(MarkedNodalCurve.smooth(h, [1] * b), params)
    return degree > 0


def multiplicity_window(m: int) -> tuple[Fraction, Fraction]:
    """Weights (1/(m+1), 1/m] where multiplicity m is the largest allowed"""
    if m < 1:
        raise DomainError(f"Multiplicity must be >= 1, got {m}")
    return Fraction(1, m + 1), Fraction(1, m)


@dataclass(frozen=True)
class RiemannHurwitz:
    d: int
    h: int
    b: int
    g: int

    def to_dict(self) -> dict[str, int]:
        return {"d": self.d, "h": self.h, "b": self.b, "g": self.g}


def riemann_hurwitz(d: int, h: int, b: int | None = None, g: int | None = None) -> RiemannHurwitz:
    """Solve 2g - 2 = d(2h - 2) + b for whichever of b, g is missing"""
    if (b is None) == (g is None):
        raise DomainError("Give exactly one of b and g")
    if d < 1 or h < 0:
        raise DomainError(f"Need d >= 1 and h >= 0, got d={d}, h={h}")
    if b is not None:
        if b < 0:
            raise DomainError(f"b must be nonnegative, got {b}")
        two_g = d * (2 * h - 2) + b + 2
        if two_g % 2:
            raise ParityError(f"d(2h-2) + b = {two_g - 2} is odd; no integral genus", {"b": b})
        if two_g < 0:
            raise DomainError(f"Solution g = {Fraction(two_g, 2)} is negative")
        return RiemannHurwitz(d, h, b, two_g // 2)
    assert g is not None
    if g < 0:
        raise DomainError(f"g must be nonnegative, got {g}")
    solved = 2 * g - 2 - d * (2 * h - 2)
    if solved < 0:
        raise DomainError(f"Solution b = {solved} is negative")
    return RiemannHurwitz(d, h, solved, g)
