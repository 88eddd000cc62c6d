"""Marked nodal curves and weighted stability"""

from covercrimp.curves.hassett import (
    RiemannHurwitz,
    StabilityChamber,
    StabilityReport,
    hassett_nonempty,
    is_epsilon_stable,
    multiplicity_window,
    riemann_hurwitz,
    stability_chambers,
    stability_thresholds,
)
from covercrimp.curves.marked_curve import (
    MarkedNodalCurve,
    Marking,
    StabilityParams,
    arithmetic_genus,
    omega_epsilon_degrees,
)

__all__ = [
    "MarkedNodalCurve",
    "Marking",
    "RiemannHurwitz",
    "StabilityChamber",
    "StabilityParams",
    "StabilityReport",
    "arithmetic_genus",
    "hassett_nonempty",
    "is_epsilon_stable",
    "multiplicity_window",
    "omega_epsilon_degrees",
    "riemann_hurwitz",
    "stability_chambers",
    "stability_thresholds",
]
