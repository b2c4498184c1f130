"""Curvature of left-invariant metrics on Lie algebras.

All tensors are expressed in the frame ``e_1..e_n`` of the algebra:

* ``gamma[i][j][k]``  -- coefficient of ``e_k`` in ``nabla_{e_i} e_j``
* ``R[i][j][k][l]``   -- coefficient of ``e_l`` in ``R(e_i, e_j) e_k`` with
  ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z``
* ``Ric[j][k] = sum_i R[i][j][k][i]``, the Ricci operator is ``g^{-1} Ric``.

Entries are Fractions, or ParamScalars when the metric carries a parameter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import Degenerate, DimensionMismatch, NotSymmetric, ParameterError
from .exact import Matrix, mat_det, mat_inverse
from .exact.scalar import ParamScalar, scalar_var, simplify, substitute
from .liealg import LieAlgebra

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Connection:
    gamma: tuple  # gamma[i][j][k]

    def nabla(self, i: int, j: int) -> tuple:
        return self.gamma[i][j]

    @property
    def dim(self):
        return len(self.gamma)


@dataclass(frozen=True)
class CurvatureTensor:
    r: tuple  # r[i][j][k][l]

    def __getitem__(self, idx):
        i, j, k, l = idx
        return self.r[i][j][k][l]

    def components(self):
        n = len(self.r)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        yield (i, j, k, l), self.r[i][j][k][l]

    def is_zero(self) -> bool:
        return not any(v for _, v in self.components())


@dataclass(frozen=True)
class RicciData:
    ric: Matrix
    op: Matrix
    scalar: object


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """A Lie algebra with a constant, symmetric, nondegenerate frame metric."""

    algebra: LieAlgebra
    metric: Matrix
    param: str | None = None
    name: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def metric_inverse(self) -> Matrix:
        return mat_inverse(self.metric)

    @cached_property
    def connection(self) -> Connection:
        return _levi_civita(self)

    @cached_property
    def ricci(self) -> RicciData:
        ric = _ricci_tensor(self)
        op = self.metric_inverse @ ric
        return RicciData(ric, op, op.trace())

    def is_parameter_free(self) -> bool:
        return self.metric.is_parameter_free()


def make_metric_lie_algebra(a: LieAlgebra, g, param: str | None = None, name: str = "") -> MetricLieAlgebra:
    g = g if isinstance(g, Matrix) else Matrix(g)
    if g.shape != (a.dim, a.dim):
        raise DimensionMismatch(f"metric has shape {g.shape}, algebra has dimension {a.dim}")
    if not g.is_symmetric():
        raise NotSymmetric("metric matrix is not symmetric")
    vars_ = {scalar_var(x) for x in g.flat()} - {None}
    if len(vars_) > 1:
        raise ParameterError(f"metric depends on several parameters {sorted(vars_)}")
    if vars_:
        (found,) = vars_
        if param is not None and param != found:
            raise ParameterError(f"metric uses parameter {found!r}, declared {param!r}")
        param = found
    if not mat_det(g):
        raise Degenerate("metric is degenerate (determinant vanishes identically)")
    return MetricLieAlgebra(a, g, param, name)


def instantiate(m: MetricLieAlgebra, value) -> MetricLieAlgebra:
    """Substitute a rational value for the metric's parameter."""
    if m.param is None:
        return m
    g = m.metric.map(lambda x: substitute(x, m.param, value))
    return make_metric_lie_algebra(m.algebra, g, None, m.name)


def _bracket_lowered(m: MetricLieAlgebra):
    """``b[i][j][l] = g([e_i, e_j], e_l)``."""
    n = m.dim
    g = m.metric
    b = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in m.algebra.brackets.items():
        row = b[i][j]
        for k, c in terms:
            for l in range(n):
                gl = g[k, l]
                if gl:
                    row[l] = row[l] + c * gl
    return b


def _levi_civita(m: MetricLieAlgebra) -> Connection:
    n = m.dim
    b = _bracket_lowered(m)
    ginv = m.metric_inverse
    gamma = []
    for i in range(n):
        plane = []
        for j in range(n):
            # Koszul: 2 g(nabla_i e_j, e_l) = g([e_i,e_j],e_l) - g([e_j,e_l],e_i) + g([e_l,e_i],e_j)
            low = [(b[i][j][l] - b[j][l][i] + b[l][i][j]) * _HALF for l in range(n)]
            vec = []
            for k in range(n):
                acc = _ZERO
                for l in range(n):
                    if low[l]:
                        gk = ginv[k, l]
                        if gk:
                            acc = acc + gk * low[l]
                vec.append(simplify(acc))
            plane.append(tuple(vec))
        gamma.append(tuple(plane))
    return Connection(tuple(gamma))


def levi_civita(m: MetricLieAlgebra) -> Connection:
    return m.connection


def _sparse_gamma(m):
    gamma = m.connection.gamma
    n = m.dim
    return [[[(k, gamma[i][j][k]) for k in range(n) if gamma[i][j][k]] for j in range(n)] for i in range(n)]


def curvature_tensor(m: MetricLieAlgebra) -> CurvatureTensor:
    n = m.dim
    sg = _sparse_gamma(m)
    brackets = m.algebra.brackets
    r = []
    for i in range(n):
        ri = []
        for j in range(n):
            rij = []
            bij = brackets.get((i, j), ())
            for k in range(n):
                out = [_ZERO] * n
                # nabla_i (nabla_j e_k)
                for p, a in sg[j][k]:
                    for l, b in sg[i][p]:
                        out[l] = out[l] + a * b
                # - nabla_j (nabla_i e_k)
                for p, a in sg[i][k]:
                    for l, b in sg[j][p]:
                        out[l] = out[l] - a * b
                # - nabla_[e_i,e_j] e_k
                for p, c in bij:
                    for l, b in sg[p][k]:
                        out[l] = out[l] - c * b
                rij.append(tuple(simplify(x) for x in out))
            ri.append(tuple(rij))
        r.append(tuple(ri))
    return CurvatureTensor(tuple(r))


def _ricci_tensor(m: MetricLieAlgebra) -> Matrix:
    """Contract the curvature directly without materialising all n^4 entries."""
    n = m.dim
    gamma = m.connection.gamma
    sg = _sparse_gamma(m)
    brackets = m.algebra.brackets
    # trace[p] = sum_i gamma^i_{ip}
    trace = [_ZERO] * n
    for i in range(n):
        for p in range(n):
            if gamma[i][p][i]:
                trace[p] = trace[p] + gamma[i][p][i]
    ric = [[_ZERO] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            acc = _ZERO
            for p, a in sg[j][k]:
                if trace[p]:
                    acc = acc + a * trace[p]
            for i in range(n):
                for p, a in sg[i][k]:
                    b = gamma[j][p][i]
                    if b:
                        acc = acc - a * b
                for p, c in brackets.get((i, j), ()):
                    b = gamma[p][k][i]
                    if b:
                        acc = acc - c * b
            ric[j][k] = simplify(acc)
    return Matrix(ric)


def ricci_tensor(m: MetricLieAlgebra) -> Matrix:
    return m.ricci.ric


def ricci_operator(m: MetricLieAlgebra) -> Matrix:
    return m.ricci.op


def scalar_curvature(m: MetricLieAlgebra):
    return m.ricci.scalar


def ricci_data(m: MetricLieAlgebra) -> RicciData:
    return m.ricci


def einstein_constant(m: MetricLieAlgebra) -> Fraction | None:
    """``lam`` with ``Ric = lam g`` exactly, or None if the metric is not Einstein."""
    if not m.is_parameter_free():
        raise ParameterError("instantiate the metric parameter before testing Einstein")
    ric, g = m.ricci.ric, m.metric
    n = m.dim
    lam = None
    for i in range(n):
        for j in range(n):
            if g[i, j]:
                lam = ric[i, j] / g[i, j]
                break
        if lam is not None:
            break
    if (ric - g * lam).is_zero():
        return simplify(lam)
    return None


def is_flat(m: MetricLieAlgebra) -> bool:
    return curvature_tensor(m).is_zero()


def _pick_sample(m: MetricLieAlgebra, seed: int = 0):
    rng = random.Random(seed)
    while True:
        t = Fraction(rng.randint(-97, 97), rng.randint(1, 13))
        try:
            g = m.metric.map(lambda x: substitute(x, m.param, t))
        except ZeroDivisionError:
            continue
        if mat_det(g):
            return g


def signature(m: MetricLieAlgebra) -> tuple[int, int]:
    """``(positive, negative)`` counts of the metric's inertia.

    Parameterised metrics are evaluated at a seeded random rational point, so
    the answer is informational only.
    """
    g = m.metric if m.param is None else _pick_sample(m)
    return congruence_inertia(g)


def congruence_inertia(g: Matrix) -> tuple[int, int]:
    """Inertia of a rational symmetric matrix by symmetric Gaussian elimination."""
    a = g.tolist()
    n = len(a)
    pos = neg = 0
    for c in range(n):
        if not a[c][c]:
            p = next((i for i in range(c + 1, n) if a[i][i]), None)
            if p is not None:
                a[c], a[p] = a[p], a[c]
                for row in a:
                    row[c], row[p] = row[p], row[c]
            else:
                q = next((i for i in range(c + 1, n) if a[c][i]), None)
                if q is None:
                    continue
                # e_c <- e_c + e_q turns the off-diagonal entry into a diagonal one
                for k in range(n):
                    a[c][k] += a[q][k]
                for k in range(n):
                    a[k][c] += a[k][q]
        piv = a[c][c]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f:
                for k in range(n):
                    a[i][k] -= f * a[c][k]
                for k in range(n):
                    a[k][i] -= f * a[k][c]
    return pos, neg


def is_lorentzian(m: MetricLieAlgebra) -> bool:
    return signature(m)[1] == 1
