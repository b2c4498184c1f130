"""One-dimensional metric solvable extensions and their Einstein parameters.

The extension of ``(g, <,>)`` by a derivation ``D`` has basis ``(H, e_1..e_n)``
with ``[H, e_i] = D e_i``, the original brackets on ``g``, and the metric
``<H,H> = h``, ``<H, e_i> = 0``, ``<,>`` on ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import JacobiViolation, NotADerivation, ParameterError
from .exact import Matrix, ParamScalar, Poly, mat_det, poly_gcd, poly_rational_roots
from .exact.scalar import as_param, simplify
from .geometry import MetricLieAlgebra, einstein_constant, instantiate, make_metric_lie_algebra
from .liealg import is_derivation, make_lie_algebra


@dataclass(frozen=True)
class ExtensionSpec:
    base: MetricLieAlgebra
    d: Matrix
    param: str
    result: MetricLieAlgebra

    def at(self, h) -> MetricLieAlgebra:
        return instantiate(self.result, h)


def build_solvable_extension(
    base: MetricLieAlgebra, d: Matrix, param: str = "h", name: str = ""
) -> ExtensionSpec:
    if base.param is not None:
        raise ParameterError("base metric must be parameter-free")
    if not d.is_parameter_free():
        raise ParameterError("derivation must be parameter-free")
    if not is_derivation(base.algebra, d):
        raise NotADerivation("the extending map is not a derivation of the base algebra")
    n = base.dim
    brackets = []
    # [H, e_i] = D e_i is column i of D
    for i in range(n):
        out = {k + 1: d[k, i] for k in range(n) if d[k, i]}
        if out:
            brackets.append((0, i + 1, out))
    for (i, j), terms in base.algebra.brackets.items():
        if i < j:
            brackets.append((i + 1, j + 1, {k + 1: c for k, c in terms}))
    names = ("H",) + base.algebra.basis_names
    try:
        alg = make_lie_algebra(n + 1, brackets, names)
    except JacobiViolation as exc:  # pragma: no cover - guarded by is_derivation
        raise AssertionError("derivation passed but the extension violates Jacobi") from exc
    g = [[ParamScalar.param(param)] + [0] * n]
    for i in range(n):
        g.append([0] + list(base.metric.row(i)))
    result = make_metric_lie_algebra(alg, Matrix(g), param, name or f"{base.name}+H")
    return ExtensionSpec(base, d, param, result)


@dataclass
class EinsteinAnalysis:
    """Outcome of imposing ``Ric = lam g`` on an extension, with ``lam = Ric(H,H)/h``."""

    solutions: list = field(default_factory=list)   # [(h, lam)]
    residuals: list = field(default_factory=list)   # numerator polynomials, nonzero only
    common: Poly | None = None                      # gcd of the residual numerators
    einstein_for_all: bool = False
    unresolved: Poly | None = None                  # factor of `common` with no rational root
    lam: object = None                              # lam as a rational function of h


def einstein_analysis(ext: ExtensionSpec) -> EinsteinAnalysis:
    m = ext.result
    n = m.dim
    g = m.metric
    for i in range(n):
        for j in range(n):
            if (i, j) != (0, 0) and isinstance(g[i, j], ParamScalar):
                raise ParameterError("the extension parameter may only appear in <H,H>")
    ric = m.ricci.ric
    h = ParamScalar.param(ext.param)
    lam = as_param(ric[0, 0]) / h
    residuals = []
    for i in range(n):
        for j in range(i, n):
            r = as_param(ric[i, j]) - lam * g[i, j]
            if r:
                residuals.append(r.num.with_var(ext.param))
    out = EinsteinAnalysis(residuals=residuals, lam=simplify(lam))
    if not residuals:
        out.einstein_for_all = True
        return out
    common = residuals[0]
    for r in residuals[1:]:
        common = poly_gcd(common, r)
    out.common = common.monic()
    if common.degree <= 0:
        return out
    roots = poly_rational_roots(common)
    det = as_param(mat_det(g))
    remaining = common
    for root in dict.fromkeys(roots):
        while remaining.degree > 0 and remaining(root) == 0:
            remaining = remaining // Poly((-root, 1), ext.param)
        if root == 0 or det(root) == 0:
            continue
        out.solutions.append((root, Fraction(simplify(as_param(lam)(root)))))
    if remaining.degree > 0:
        out.unresolved = remaining.monic()
    return out


def einstein_parameter_solve(ext: ExtensionSpec) -> list[tuple[Fraction, Fraction]]:
    """Rational values of ``h`` making the extension Einstein, paired with the Einstein constant."""
    return einstein_analysis(ext).solutions


def check_einstein_solution(ext: ExtensionSpec, h, lam) -> bool:
    return einstein_constant(ext.at(h)) == lam
