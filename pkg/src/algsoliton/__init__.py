"""Exact curvature, algebraic Ricci solitons and Einstein extensions of metric Lie algebras."""

from .errors import *  # noqa: F401,F403
from .extension import build_solvable_extension, einstein_analysis, einstein_parameter_solve
from .geometry import MetricLieAlgebra, make_metric_lie_algebra
from .liealg import LieAlgebra, derivation_basis, make_lie_algebra
from .soliton import SolitonSolution, solve_algebraic_soliton

__version__ = "0.1.0"
