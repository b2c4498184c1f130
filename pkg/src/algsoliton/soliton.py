"""Algebraic Ricci solitons ``rc = c Id + D`` with ``D`` a derivation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ParameterError
from .exact import Matrix, mat_rank, mat_solve
from .geometry import MetricLieAlgebra
from .liealg import DerivationBasis, derivation_basis


class SolitonClass(str, enum.Enum):
    SHRINKING = "shrinking"
    STEADY = "steady"
    EXPANDING = "expanding"
    EINSTEIN = "einstein"
    RICCI_FLAT = "ricci_flat"


@dataclass(frozen=True)
class SolitonSolution:
    c: Fraction
    d: Matrix
    kind: SolitonClass
    unique: bool
    coefficients: tuple = ()


def classify_soliton(c, d: Matrix) -> SolitonClass:
    if d.is_zero():
        return SolitonClass.RICCI_FLAT if c == 0 else SolitonClass.EINSTEIN
    if c > 0:
        return SolitonClass.SHRINKING
    if c < 0:
        return SolitonClass.EXPANDING
    return SolitonClass.STEADY


def soliton_system(m: MetricLieAlgebra, basis: DerivationBasis | None = None) -> tuple[Matrix, list]:
    """Linear system in ``(c, alpha_1, ..., alpha_k)`` for ``c I + sum alpha_k B_k = rc``.

    One equation per matrix entry, in row-major order.
    """
    basis = basis if basis is not None else derivation_basis(m.algebra)
    n = m.dim
    columns = [Matrix.identity(n).flat()] + [b.flat() for b in basis]
    a = Matrix(list(zip(*columns)))
    return a, m.ricci.op.flat()


def solve_algebraic_soliton(m: MetricLieAlgebra) -> SolitonSolution | None:
    if not m.is_parameter_free():
        raise ParameterError("algebraic soliton solver needs a parameter-free metric")
    basis = derivation_basis(m.algebra)
    a, rhs = soliton_system(m, basis)
    sol = mat_solve(a, rhs)
    if sol is None:
        return None
    c, *alpha = sol.x
    d = basis.combination(alpha) if alpha else Matrix.zeros(m.dim)
    return SolitonSolution(c, d, classify_soliton(c, d), sol.unique, tuple(alpha))


def soliton_system_rank(m: MetricLieAlgebra) -> tuple[int, int]:
    """``(rank, number of unknowns)`` of the soliton system."""
    a, _ = soliton_system(m)
    return mat_rank(a), a.cols


def lie_derivative_form(m: MetricLieAlgebra, d: Matrix) -> Matrix:
    """``(L_X g)(e_i, e_j) = (g(D e_i, e_j) + g(e_i, D e_j)) / 2`` for the field generated by ``D``."""
    if d.shape != m.metric.shape:
        raise DimensionMismatch(f"derivation has shape {d.shape}, metric {m.metric.shape}")
    g = m.metric
    return (d.T @ g + g @ d) * Fraction(1, 2)


def verify_ricci_soliton_identity(m: MetricLieAlgebra, s: SolitonSolution) -> bool:
    """Check ``Ric = c g + L_X g`` exactly."""
    return m.ricci.ric == m.metric * s.c + lie_derivative_form(m, s.d)
