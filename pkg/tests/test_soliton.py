from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import props
from algsoliton import catalog
from algsoliton.errors import DimensionMismatch, ParameterError
from algsoliton.exact import Matrix, ParamScalar
from algsoliton.geometry import make_metric_lie_algebra
from algsoliton.liealg import is_derivation, make_lie_algebra
from algsoliton.soliton import (
    SolitonClass,
    classify_soliton,
    lie_derivative_form,
    soliton_system_rank,
    solve_algebraic_soliton,
    verify_ricci_soliton_identity,
)

SOLITON_IDS = [e for e in catalog.CATALOG_IDS
               if not e.startswith("remark44") and not (e.startswith("oscillator") and "eps=0" not in e)]


def test_h3_g1():
    s = solve_algebraic_soliton(catalog.h3_metric("g1"))
    assert (s.c, s.d, s.kind, s.unique) == (F(3, 2), Matrix.diag([-2, -1, -1]), SolitonClass.SHRINKING, True)


def test_h3_g2():
    s = solve_algebraic_soliton(catalog.h3_metric("g2"))
    assert (s.c, s.d) == (F(3, 2), Matrix.diag([-1, -1, -2]))


def test_g3_is_ricci_flat():
    s = solve_algebraic_soliton(catalog.h3_metric("g3"))
    assert s.c == 0 and s.d.is_zero() and s.kind is SolitonClass.RICCI_FLAT


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_heisenberg_closed_form(n):
    s = solve_algebraic_soliton(catalog.heisenberg(n))
    b = F(-(n + 1), 2)
    assert s.c == F(n + 2, 2)
    assert s.d == Matrix.diag([b] * (2 * n) + [2 * b])
    assert s.kind is SolitonClass.SHRINKING


@pytest.mark.parametrize("m, lambdas", [(1, [1]), (2, [1, 2]), (2, [3, F(1, 2)])])
def test_oscillator_steady(m, lambdas):
    s = solve_algebraic_soliton(catalog.oscillator(m, lambdas, 0))
    n = 2 * m + 2
    assert s.c == 0 and s.kind is SolitonClass.STEADY
    assert s.d[0, n - 1] == F(m, 2)
    assert sum(1 for x in s.d.flat() if x) == 1
    assert s.d.trace() == 0


@pytest.mark.parametrize("eps", [F(1), F(-1), F(1, 2), F(-3, 7)])
def test_oscillator_nonzero_eps_has_no_soliton(eps):
    assert solve_algebraic_soliton(catalog.oscillator(1, [1], eps)) is None


@pytest.mark.parametrize("eid", ["e2", "e11"])
def test_motion_groups(eid):
    s = solve_algebraic_soliton(catalog.load(eid))
    assert (s.c, s.d) == (2, Matrix.diag([0, -2, -2]))


@pytest.mark.parametrize("eid", SOLITON_IDS)
def test_soliton_properties(eid):
    m = catalog.load(eid)
    s = solve_algebraic_soliton(m)
    assert s is not None
    assert is_derivation(m.algebra, s.d)
    assert m.ricci.op == Matrix.identity(m.dim) * s.c + s.d
    assert verify_ricci_soliton_identity(m, s)
    props.check_soliton_rank(m)


def test_classification():
    z = Matrix.zeros(2)
    d = Matrix.diag([1, 0])
    assert classify_soliton(F(1), d) is SolitonClass.SHRINKING
    assert classify_soliton(F(-1), d) is SolitonClass.EXPANDING
    assert classify_soliton(F(0), d) is SolitonClass.STEADY
    assert classify_soliton(F(2), z) is SolitonClass.EINSTEIN
    assert classify_soliton(F(0), z) is SolitonClass.RICCI_FLAT


def test_non_unique_soliton_reported():
    # abelian: rc = 0 and every endomorphism is a derivation, so c is free
    m = make_metric_lie_algebra(make_lie_algebra(2), Matrix.identity(2))
    s = solve_algebraic_soliton(m)
    assert not s.unique
    rank, unknowns = soliton_system_rank(m)
    assert rank < unknowns


def test_parameter_metric_rejected():
    g = Matrix([[ParamScalar.param("h"), 0, 0], [0, 1, 0], [0, 0, -1]])
    m = make_metric_lie_algebra(catalog.h3_metric("g1").algebra, g)
    with pytest.raises(ParameterError):
        solve_algebraic_soliton(m)


def test_lie_derivative_shape_check():
    with pytest.raises(DimensionMismatch):
        lie_derivative_form(catalog.h3_metric("g1"), Matrix.identity(2))


def test_identity_detects_wrong_constant():
    m = catalog.h3_metric("g1")
    s = solve_algebraic_soliton(m)
    wrong = type(s)(s.c + 1, s.d, s.kind, s.unique)
    assert not verify_ricci_soliton_identity(m, wrong)


@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_every_lorentzian_h3_metric_is_a_soliton(v):
    rows = [[v[0], v[1], v[2]], [v[1], v[3], v[4]], [v[2], v[4], v[5]]]
    from algsoliton.exact import mat_det
    from algsoliton.geometry import signature

    g = Matrix(rows)
    assume(mat_det(g) != 0)
    m = make_metric_lie_algebra(catalog.h3_metric("g1").algebra, g)
    assume(signature(m) == (2, 1))
    s = solve_algebraic_soliton(m)
    assert s is not None and verify_ricci_soliton_identity(m, s)
