"""Left-invariant Ricci flow ``dg/dt = -2 Ric(g)`` in floating point.

The algebra stays exact; only the frame metric evolves. Ricci curvature
uses the same Koszul contraction as :mod:`algsoliton.geometry`, written
with ``numpy.einsum``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NearDegenerate
from .geometry import MetricLieAlgebra
from .liealg import DerivationBasis, LieAlgebra, derivation_basis

DET_THRESHOLD = 1e-10


def structure_array(algebra: LieAlgebra) -> np.ndarray:
    n = algebra.dim
    c = np.zeros((n, n, n))
    for (i, j), terms in algebra.brackets.items():
        for k, v in terms:
            c[i, j, k] = float(v)
    return c


@dataclass(frozen=True)
class FloatMetricState:
    algebra: LieAlgebra
    g: np.ndarray
    t: float = 0.0

    @classmethod
    def from_exact(cls, m: MetricLieAlgebra, t: float = 0.0) -> "FloatMetricState":
        if not m.is_parameter_free():
            raise ValueError("instantiate the metric parameter before flowing")
        g = np.array([[float(x) for x in row] for row in m.metric], dtype=float)
        return cls(m.algebra, g, t)


def _christoffel(c: np.ndarray, g: np.ndarray, ginv: np.ndarray) -> np.ndarray:
    b = np.einsum("ijk,kl->ijl", c, g)  # g([e_i,e_j], e_l)
    low = 0.5 * (b - np.einsum("jli->ijl", b) + np.einsum("lij->ijl", b))
    return np.einsum("kl,ijl->ijk", ginv, low)


def _ricci(c: np.ndarray, g: np.ndarray, t: float = 0.0) -> np.ndarray:
    det = np.linalg.det(g)
    if abs(det) < DET_THRESHOLD:
        raise NearDegenerate(t, det)
    ginv = np.linalg.inv(g)
    gam = _christoffel(c, g, ginv)
    trace = np.einsum("ipi->p", gam)
    ric = (
        np.einsum("jkp,p->jk", gam, trace)
        - np.einsum("ikp,jpi->jk", gam, gam)
        - np.einsum("ijp,pki->jk", c, gam)
    )
    return 0.5 * (ric + ric.T)


def ricci_float(algebra: LieAlgebra, g) -> np.ndarray:
    g = np.asarray(g, dtype=float)
    if g.shape != (algebra.dim, algebra.dim):
        raise DimensionMismatch(f"metric has shape {g.shape}, algebra has dimension {algebra.dim}")
    return _ricci(structure_array(algebra), g)


def integrate(state: FloatMetricState, t_end: float, dt: float) -> list[FloatMetricState]:
    """Classical RK4 with uniform steps of size <= dt that land exactly on ``t_end``.

    The returned trajectory starts with ``state`` and holds one state per step.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end <= state.t:
        raise ValueError("t_end must be later than the initial time")
    steps = max(1, math.ceil((t_end - state.t) / dt - 1e-9))
    h = (t_end - state.t) / steps
    c = structure_array(state.algebra)
    g, t0 = state.g.copy(), state.t

    def rhs(gg, tt):
        return -2.0 * _ricci(c, gg, tt)

    traj = [state]
    for s in range(steps):
        t = t0 + s * h
        k1 = rhs(g, t)
        k2 = rhs(g + 0.5 * h * k1, t + 0.5 * h)
        k3 = rhs(g + 0.5 * h * k2, t + 0.5 * h)
        k4 = rhs(g + h * k3, t + h)
        g = g + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        g = 0.5 * (g + g.T)
        t_next = t0 + (s + 1) * h
        det = np.linalg.det(g)
        if abs(det) < DET_THRESHOLD:
            raise NearDegenerate(t_next, det)
        traj.append(FloatMetricState(state.algebra, g, t_next))
    return traj


def _basis_columns(basis: DerivationBasis, n: int) -> np.ndarray:
    cols = [np.eye(n).ravel()]
    for b in basis:
        cols.append(np.array([[float(x) for x in row] for row in b]).ravel())
    return np.stack(cols, axis=1)


def soliton_residual(state: FloatMetricState, basis: DerivationBasis | None = None) -> float:
    """Norm of the least-squares misfit of ``rc(g) = c I + sum alpha_k B_k``."""
    n = state.algebra.dim
    basis = basis if basis is not None else derivation_basis(state.algebra)
    rc = np.linalg.solve(state.g, ricci_float(state.algebra, state.g))
    a = _basis_columns(basis, n)
    x, *_ = np.linalg.lstsq(a, rc.ravel(), rcond=None)
    return float(np.linalg.norm(a @ x - rc.ravel()))


def residuals(traj: Sequence[FloatMetricState]) -> list[float]:
    if not traj:
        return []
    basis = derivation_basis(traj[0].algebra)
    return [soliton_residual(s, basis) for s in traj]


def trajectory_records(traj: Sequence[FloatMetricState]) -> Iterable[dict]:
    for state, res in zip(traj, residuals(traj)):
        yield {"t": state.t, "g": [float(x) for x in state.g.ravel()], "residual": res}


def write_jsonl(traj: Sequence[FloatMetricState], fp: IO[str]) -> None:
    for rec in trajectory_records(traj):
        fp.write(json.dumps(rec) + "\n")
