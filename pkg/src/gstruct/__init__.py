"""Numerical workbench for invariant metric connections with skew torsion
on the 14-dimensional homogeneous spaces carrying a symplectic frame
reduction: equivariant-connection solving, torsion and its type splitting,
holonomy, curvature, and Dirac spectra on invariant spinors.
"""

from . import connections, curvature, groups, liealg, linalg, reps, sp3, spaces, spin
from .errors import (
    BadDimension,
    BadParams,
    ConventionMismatch,
    DimensionMismatch,
    GstructError,
    Infeasible,
    NoInvariantSpinors,
    NotAnIdeal,
    NotAntisymmetric,
    NotClosed,
    NotReductive,
    NotSelfAdjoint,
    NotSkew,
    StructureViolation,
    TorsionNotParallel,
)
from .linalg import DEFAULT_TOL, ToleranceProfile, eig_selfadjoint, nullspace, rank
from .spaces import ALIASES, SPACE_IDS, MetricParams, build, fixtures

__version__ = "0.1.0"

__all__ = [
    "ALIASES",
    "DEFAULT_TOL",
    "MetricParams",
    "SPACE_IDS",
    "ToleranceProfile",
    "build",
    "connections",
    "curvature",
    "eig_selfadjoint",
    "fixtures",
    "groups",
    "liealg",
    "linalg",
    "nullspace",
    "rank",
    "reps",
    "sp3",
    "spaces",
    "spin",
]
