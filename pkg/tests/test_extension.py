from fractions import Fraction as F

import pytest

from algsoliton import catalog
from algsoliton.errors import JacobiViolation, NotADerivation, ParameterError
from algsoliton.exact import Matrix, ParamScalar
from algsoliton.extension import (
    ExtensionSpec,
    build_solvable_extension,
    check_einstein_solution,
    einstein_analysis,
    einstein_parameter_solve,
)
from algsoliton.geometry import einstein_constant, make_metric_lie_algebra
from algsoliton.liealg import is_derivation, make_lie_algebra
from algsoliton.soliton import solve_algebraic_soliton


def soliton_extension(eid, param="h"):
    m = catalog.load(eid)
    return build_solvable_extension(m, solve_algebraic_soliton(m).d, param)


def test_extension_layout():
    ext = soliton_extension("h3:g1")
    r = ext.result
    assert r.algebra.basis_names == ("H", "F1", "F2", "F3")
    assert r.metric[0, 0] == ParamScalar.param("h")
    assert all(r.metric[0, j] == 0 for j in range(1, 4))
    # [H, F1] = D F1 = -2 F1
    assert r.algebra.bracket([1, 0, 0, 0], [0, 1, 0, 0]) == (0, -2, 0, 0)


def test_h3_g1_extension_ricci():
    ric = soliton_extension("h3:g1").result.ricci.ric
    assert [str(ric[i, i]) for i in range(4)] == ["-6", "(-1/2*h-8)/h", "(1/2*h-4)/h", "(-1/2*h+4)/h"]


@pytest.mark.parametrize("eid, expected", [
    ("h3:g1", [(-4, F(3, 2))]),
    ("h3:g2", [(-4, F(3, 2))]),
    ("e2", [(-4, 2)]),
    ("e11", [(-4, 2)]),
    ("oscillator:m=1,eps=0", []),
    ("oscillator:m=2,eps=0,lambdas=1;2", []),
])
def test_einstein_parameters(eid, expected):
    ext = soliton_extension(eid)
    assert einstein_parameter_solve(ext) == expected
    for h, lam in expected:
        assert check_einstein_solution(ext, h, lam)
        assert einstein_constant(ext.at(h)) == lam


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_heisenberg_extension(n):
    ext = soliton_extension(f"heisenberg:n={n}", "a")
    b = F(-(n + 1), 2)
    assert einstein_parameter_solve(ext) == [(-4 * b * b, F(n, 2) + 1)]


def test_oscillator_extension_ricci():
    for m in (1, 2):
        eid = "oscillator:m=1,eps=0" if m == 1 else "oscillator:m=2,eps=0,lambdas=1;2"
        ric = soliton_extension(eid).result.ricci.ric
        n = ric.rows
        assert all(ric[i, j] == (F(m, 2) if (i, j) == (n - 1, n - 1) else 0) for i in range(n) for j in range(n))


def test_solutions_verified_at_non_solutions():
    ext = soliton_extension("h3:g1")
    assert einstein_constant(ext.at(F(-3))) is None
    assert not check_einstein_solution(ext, -4, 2)


def test_einstein_for_all():
    # extending the abelian line by 0 gives a flat metric for every h
    base = make_metric_lie_algebra(make_lie_algebra(1), Matrix([[1]]))
    ext = build_solvable_extension(base, Matrix([[0]]))
    a = einstein_analysis(ext)
    assert a.einstein_for_all and a.solutions == []


def test_common_condition_recorded():
    a = einstein_analysis(soliton_extension("h3:g1"))
    assert a.unresolved is None
    assert a.common.degree == 1 and a.common(F(-4)) == 0
    assert a.lam == ParamScalar.param("h").inverse() * -6


def test_never_einstein():
    base = make_metric_lie_algebra(make_lie_algebra(2, [(0, 1, {1: 1})]), Matrix.identity(2))
    ext = build_solvable_extension(base, Matrix.zeros(2))
    a = einstein_analysis(ext)
    # [H, .] = 0 and the base is hyperbolic, so Ric(H,H) = 0 while Ric(e_i,e_i) = -1: never Einstein
    assert a.solutions == [] and not a.einstein_for_all
    assert a.lam == 0


def test_not_a_derivation():
    m = catalog.h3_metric("g1")
    with pytest.raises(NotADerivation):
        build_solvable_extension(m, Matrix.diag([1, 1, 1]))


def test_parameter_guards():
    m = catalog.h3_metric("g1")
    h = ParamScalar.param("h")
    with pytest.raises(ParameterError):
        build_solvable_extension(m, Matrix([[h, 0, 0], [0, 0, 0], [0, 0, 0]]))
    g = Matrix([[h, 0, 0], [0, 1, 0], [0, 0, -1]])
    pm = make_metric_lie_algebra(m.algebra, g)
    with pytest.raises(ParameterError):
        build_solvable_extension(pm, Matrix.zeros(3))
    # parameter off the (H,H) slot
    off = make_metric_lie_algebra(m.algebra, Matrix([[1, 0, 0], [0, h, 0], [0, 0, -1]]))
    bad = ExtensionSpec(None, None, "h", off)
    with pytest.raises(ParameterError):
        einstein_analysis(bad)


def test_remark44_engine_verdicts():
    ext = catalog.remark44_extension(0, 0, 1, 0, 1, 1)
    assert einstein_parameter_solve(ext) == [(4, -1)]
    ext = catalog.remark44_extension(1, 1, 0, 0, 0, 2)
    assert einstein_parameter_solve(ext) == [(6, 0)]
    assert einstein_constant(ext.at(6)) == 0


@pytest.mark.parametrize("a, at, b, c, k, lam", [
    (1, 2, 1, 3, 5, 2), (0, 0, 1, 0, 1, 1), (1, 1, 0, 0, 0, 2), (F(1, 2), -1, F(-2, 3), 4, -1, F(3, 2)),
])
def test_remark44_ricci_list(a, at, b, c, k, lam):
    a, at, b, c, k, lam = map(F, (a, at, b, c, k, lam))
    ext = catalog.remark44_extension(a, at, b, c, k, lam)
    ric = ext.result.ricci.ric
    h = ParamScalar.param("h")
    H, P, X, Y, Q = range(5)
    expected = {
        (H, H): -4 * b * b,
        (X, X): -4 * b * b / h,
        (Y, Y): -4 * b * b / h,
        (P, Q): -4 * b * b / h,
        (Q, Q): (1 - lam * lam) / (2 * h) * (a * a + at * at) - 2 * k * b / h + F(1, 2),
        (X, Q): (lam - 1) / (2 * h) * (3 * a * b + at * c),
        (Y, Q): (lam - 1) / (2 * h) * (3 * at * b - a * c),
    }
    for (i, j), value in expected.items():
        assert ric[i, j] == value and ric[j, i] == value, (i, j)
    listed = set(expected) | {(j, i) for i, j in expected}
    assert all(not ric[i, j] for i in range(5) for j in range(5) if (i, j) not in listed)


def test_remark44_bad_hp_coefficient():
    with pytest.raises((NotADerivation, JacobiViolation)):
        catalog.remark44_extension(0, 0, 1, 0, 1, 1, hp_coefficient=3)
