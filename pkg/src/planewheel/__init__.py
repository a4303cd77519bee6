"""Exact toolkit for wheel point sets: construction, crossing predicates,
partition search and enumeration, and double-star theory."""

from ._core import BACKEND
from .partition import AuditReport, Partition
from .solver import SolveConfig, SolveOutcome, solve
from .wheelgeom import PointSet, WheelModel, build_bumpy_wheel, build_generalized_wheel

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BACKEND",
    "Partition",
    "PointSet",
    "SolveConfig",
    "SolveOutcome",
    "WheelModel",
    "build_bumpy_wheel",
    "build_generalized_wheel",
    "solve",
    "__version__",
]
