
import pytest

from algsoliton import catalog
from algsoliton.errors import IndexOutOfRange, JacobiViolation, ParameterError
from algsoliton.exact import ParamScalar
from algsoliton.liealg import (
    Structure,
    center_dimension,
    classify_structure,
    derivation_basis,
    derivation_constraint_matrix,
    derived_series,
    is_derivation,
    jacobi_residual,
    lower_central_series,
    make_lie_algebra,
)
from props import derivation_trials


def sl2():
    # H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H
    return make_lie_algebra(3, [(0, 1, {1: 2}), (0, 2, {2: -2}), (1, 2, {0: 1})], ["H", "E", "F"])


ALGEBRAS = {
    "h3": lambda: catalog.h3_metric("g1").algebra,
    "h5": lambda: catalog.heisenberg(2).algebra,
    "e2": lambda: catalog.euclidean_motion().algebra,
    "e11": lambda: catalog.minkowski_motion().algebra,
    "osc1": lambda: catalog.oscillator(1).algebra,
    "osc2": lambda: catalog.oscillator(2, [1, 2]).algebra,
    "sl2": sl2,
    "abelian2": lambda: make_lie_algebra(2),
}


def test_h3_derivations():
    a = ALGEBRAS["h3"]()
    basis = derivation_basis(a)
    assert basis.dim == 6
    for d in basis:
        # frame [F2,F3] = F1: D11 = D22 + D33, nothing maps into F2, F3 from F1
        assert d[0, 0] == d[1, 1] + d[2, 2]
        assert d[1, 0] == 0 and d[2, 0] == 0


@pytest.mark.parametrize("name, dim", [("e2", 4), ("e11", 4), ("sl2", 3), ("abelian2", 4)])
def test_derivation_dimensions(name, dim):
    assert derivation_basis(ALGEBRAS[name]()).dim == dim


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_derivation_dimension(n):
    # conformal symplectic part n(2n+1) + 1, plus the 2n maps into the center
    assert derivation_basis(catalog.heisenberg(n).algebra).dim == n * (2 * n + 1) + 1 + 2 * n


def test_basis_normalised():
    for name, make in ALGEBRAS.items():
        for d in derivation_basis(make()):
            first = next(x for x in d.T.flat() if x)
            assert first == 1, name


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_derivation_oracle_random_trials(name):
    trials, hits = derivation_trials(ALGEBRAS[name](), seed=name)
    assert trials >= 100
    assert hits > 0


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_constraint_matrix_kernel(name):
    alg = ALGEBRAS[name]()
    m = derivation_constraint_matrix(alg)
    assert m.cols == alg.dim ** 2
    for d in derivation_basis(alg):
        # column-major vectorisation
        vec = [d[r, c] for c in range(alg.dim) for r in range(alg.dim)]
        assert not any(m @ vec)


def test_derivations_closed_under_commutator():
    for name in ("h3", "e2", "osc1"):
        alg = ALGEBRAS[name]()
        basis = list(derivation_basis(alg))
        for a in basis:
            for b in basis:
                assert is_derivation(alg, a @ b - b @ a)


def test_jacobi_violation_reports_triple():
    with pytest.raises(JacobiViolation) as err:
        # [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 fails Jacobi
        make_lie_algebra(3, [(0, 1, {2: 1}), (1, 2, {0: 1}), (0, 2, {0: 1})])
    assert err.value.triple == (0, 1, 2)
    assert any(err.value.residual)


def test_jacobi_residual_zero_for_lie_algebras():
    for make in ALGEBRAS.values():
        alg = make()
        res = jacobi_residual(alg.structure_constants)
        assert not any(x for a in res for b in a for c in b for x in c)


def test_bad_indices_and_parameters():
    with pytest.raises(IndexOutOfRange):
        make_lie_algebra(2, [(0, 2, {1: 1})])
    with pytest.raises(ValueError):
        make_lie_algebra(2, [(0, 1, {1: 1}), (1, 0, {1: 1})])
    with pytest.raises(ParameterError):
        make_lie_algebra(2, [(0, 1, {1: ParamScalar.param("h")})])


def test_antisymmetry_filled():
    a = ALGEBRAS["e2"]()
    c = a.structure_constants
    for i in range(3):
        for j in range(3):
            assert all(c[i][j][k] == -c[j][i][k] for k in range(3))


@pytest.mark.parametrize("name, kind", [
    ("h3", Structure.NILPOTENT), ("h5", Structure.NILPOTENT), ("e2", Structure.SOLVABLE),
    ("e11", Structure.SOLVABLE), ("osc1", Structure.SOLVABLE), ("sl2", Structure.NON_SOLVABLE),
    ("abelian2", Structure.ABELIAN),
])
def test_classification(name, kind):
    assert classify_structure(ALGEBRAS[name]()) == kind


def test_series_and_center():
    h3 = ALGEBRAS["h3"]()
    assert lower_central_series(h3) == [3, 1, 0]
    assert derived_series(h3) == [3, 1, 0]
    assert center_dimension(h3) == 1
    assert center_dimension(ALGEBRAS["e2"]()) == 0
    assert center_dimension(ALGEBRAS["osc1"]()) == 1
    assert lower_central_series(sl2()) == [3]


def test_bracket_and_ad():
    a = ALGEBRAS["h3"]()
    assert a.bracket([0, 1, 0], [0, 0, 1]) == (1, 0, 0)
    ad = a.ad([0, 1, 0])
    assert ad @ [0, 0, 1] == (1, 0, 0)
