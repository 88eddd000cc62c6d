"""Crimps of a fixed normalization over a disk"""

from covercrimp.crimp.classify import (
    CrimpOrbit,
    CrossRatio,
    aut_orbits,
    branch_cross_ratio,
    crimp_of,
    crimps_isomorphic,
    tangent_cross_ratio,
)
from covercrimp.crimp.enumerate import Strategy, enumerate_crimps, search_space_size
from covercrimp.crimp.problem import Automorphism, CrimpProblem, NormalizationData, crimp_delta
from covercrimp.crimp.subalgebra import CrimpCheck, CrimpSubalgebra, is_crimp

__all__ = [
    "Automorphism",
    "CrimpCheck",
    "CrimpOrbit",
    "CrimpProblem",
    "CrimpSubalgebra",
    "CrossRatio",
    "NormalizationData",
    "Strategy",
    "aut_orbits",
    "branch_cross_ratio",
    "crimp_delta",
    "crimp_of",
    "crimps_isomorphic",
    "enumerate_crimps",
    "is_crimp",
    "search_space_size",
    "tangent_cross_ratio",
]
