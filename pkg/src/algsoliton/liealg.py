"""Lie algebras given by structure constants.

Indices are 0-based throughout the library. ``C[i][j][k]`` is the
coefficient of ``e_k`` in ``[e_i, e_j]``. Endomorphisms act on column
vectors: column ``j`` of a matrix ``D`` holds the coordinates of ``D e_j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, JacobiViolation, ParameterError
from .exact import Matrix, mat_nullspace, mat_rank, mat_rref
from .exact.scalar import ParamScalar

_ZERO = Fraction(0)


class Structure(str, enum.Enum):
    ABELIAN = "abelian"
    NILPOTENT = "nilpotent"
    SOLVABLE = "solvable"
    NON_SOLVABLE = "non-solvable"


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    dim: int
    basis_names: tuple[str, ...]
    structure_constants: tuple  # C[i][j][k]
    # sparse view: (i, j) -> ((k, coeff), ...) for every nonzero bracket, both orders
    brackets: dict = field(repr=False, compare=False)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bracket of two coordinate vectors."""
        out = [_ZERO] * self.dim
        for (i, j), terms in self.brackets.items():
            a = x[i]
            if not a:
                continue
            b = y[j]
            if not b:
                continue
            ab = a * b
            for k, c in terms:
                out[k] += ab * c
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix(cols).T

    def is_abelian(self) -> bool:
        return not self.brackets

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure_constants == other.structure_constants

    def __hash__(self):
        return hash((self.dim, self.structure_constants))


def _unit(n, j):
    v = [_ZERO] * n
    v[j] = Fraction(1)
    return v


def _rational(x) -> Fraction:
    if isinstance(x, ParamScalar):
        if not x.is_constant():
            raise ParameterError(
                f"structure constant {x} depends on a parameter; instantiate it first"
            )
        return x.constant_value()
    return Fraction(x)


def _from_constants(dim, c, names):
    sparse = {}
    for i in range(dim):
        for j in range(dim):
            terms = tuple((k, c[i][j][k]) for k in range(dim) if c[i][j][k])
            if terms:
                sparse[(i, j)] = terms
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in c)
    return LieAlgebra(dim, tuple(names), frozen, sparse)


def make_lie_algebra(
    dim: int,
    brackets: Iterable[tuple[int, int, Mapping[int, object]]] = (),
    basis_names: Sequence[str] | None = None,
) -> LieAlgebra:
    """Build and validate a Lie algebra from its nonzero brackets.

    Each entry ``(i, j, {k: coeff, ...})`` states ``[e_i, e_j] = sum coeff e_k``;
    the reversed bracket is filled in by antisymmetry. Raises
    :class:`JacobiViolation` when the data does not define a Lie algebra.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    names = tuple(basis_names) if basis_names is not None else tuple(f"e{i + 1}" for i in range(dim))
    if len(names) != dim:
        raise DimensionMismatch(f"{len(names)} basis names for dimension {dim}")
    c = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for i, j, out in brackets:
        for idx in (i, j, *out):
            if not 0 <= idx < dim:
                raise IndexOutOfRange(f"basis index {idx} outside 0..{dim - 1}")
        if i == j:
            if any(_rational(v) for v in out.values()):
                raise ValueError(f"[e{i}, e{i}] must vanish")
            continue
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ValueError(f"bracket of basis pair {key} given twice")
        seen.add(key)
        for k, v in out.items():
            v = _rational(v)
            c[i][j][k] = v
            c[j][i][k] = -v
    alg = _from_constants(dim, c, names)
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                res = _jacobi_at(alg, i, j, k)
                if any(res):
                    raise JacobiViolation((i, j, k), res)
    return alg


def _jacobi_at(alg: LieAlgebra, i, j, k):
    n = alg.dim
    ei, ej, ek = _unit(n, i), _unit(n, j), _unit(n, k)
    terms = (
        alg.bracket(ei, alg.bracket(ej, ek)),
        alg.bracket(ej, alg.bracket(ek, ei)),
        alg.bracket(ek, alg.bracket(ei, ej)),
    )
    return tuple(a + b + c for a, b, c in zip(*terms))


def jacobi_residual(c) -> list:
    """``residual[i][j][k][m]``: the ``e_m`` component of the Jacobiator on ``(e_i, e_j, e_k)``.

    Accepts raw antisymmetric constants (nested sequences) so invalid data can
    be inspected without going through :func:`make_lie_algebra`.
    """
    n = len(c)
    cc = [[[Fraction(c[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
    alg = _from_constants(n, cc, [f"e{i + 1}" for i in range(n)])
    return [[[list(_jacobi_at(alg, i, j, k)) for k in range(n)] for j in range(n)] for i in range(n)]


def _vec_index(n, row, col):
    # vec(D) stacks the columns of D
    return col * n + row


def derivation_constraint_matrix(a: LieAlgebra) -> Matrix:
    """Matrix ``M`` with ``M vec(D) = 0`` exactly when ``D`` is a derivation.

    Rows are indexed by ``(m, (i, j))`` with ``i < j`` in lexicographic order and
    express the ``e_m`` component of ``D[e_i,e_j] - [De_i,e_j] - [e_i,De_j]``.
    Columns follow the column-major vectorisation of ``D``.
    """
    n = a.dim
    c = a.structure_constants
    rows = []
    for m in range(n):
        for i in range(n):
            for j in range(i + 1, n):
                row = [_ZERO] * (n * n)
                for k in range(n):
                    if c[i][j][k]:
                        row[_vec_index(n, m, k)] += c[i][j][k]
                for p in range(n):
                    if c[p][j][m]:
                        row[_vec_index(n, p, i)] -= c[p][j][m]
                    if c[i][p][m]:
                        row[_vec_index(n, p, j)] -= c[i][p][m]
                rows.append(row)
    if not rows:
        return Matrix.zeros(1, n * n)
    return Matrix(rows)


@dataclass(frozen=True)
class DerivationBasis:
    algebra: LieAlgebra
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def combination(self, coeffs: Sequence) -> Matrix:
        n = self.algebra.dim
        acc = Matrix.zeros(n)
        for a, b in zip(coeffs, self.basis):
            if a:
                acc = acc + b * a
        return acc


def _unvec(n, v) -> Matrix:
    return Matrix([[v[_vec_index(n, r, c)] for c in range(n)] for r in range(n)])


def derivation_basis(a: LieAlgebra) -> DerivationBasis:
    n = a.dim
    null = mat_nullspace(derivation_constraint_matrix(a))
    return DerivationBasis(a, tuple(_unvec(n, v) for v in null))


def is_derivation(a: LieAlgebra, d: Matrix) -> bool:
    """Check ``D[X,Y] = [DX,Y] + [X,DY]`` on every pair of basis vectors."""
    n = a.dim
    if d.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got {d.shape}")
    cols = [d.column(j) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d @ a.bracket(_unit(n, i), _unit(n, j))
            rhs1 = a.bracket(cols[i], _unit(n, j))
            rhs2 = a.bracket(_unit(n, i), cols[j])
            if any(x - y - z for x, y, z in zip(lhs, rhs1, rhs2)):
                return False
    return True


def _span_brackets(a: LieAlgebra, left, right):
    vecs = [a.bracket(x, y) for x in left for y in right]
    vecs = [v for v in vecs if any(v)]
    if not vecs:
        return []
    r, pivots = mat_rref(Matrix(vecs))
    return [r.row(i) for i in range(len(pivots))]


def lower_central_series(a: LieAlgebra) -> list[int]:
    """Dimensions of g, [g,g], [g,[g,g]], ... until they stabilise."""
    full = [_unit(a.dim, i) for i in range(a.dim)]
    current = full
    dims = [a.dim]
    while current:
        nxt = _span_brackets(a, full, current)
        if len(nxt) == len(current):
            break
        current = nxt
        dims.append(len(current))
    return dims


def derived_series(a: LieAlgebra) -> list[int]:
    current = [_unit(a.dim, i) for i in range(a.dim)]
    dims = [a.dim]
    while current:
        nxt = _span_brackets(a, current, current)
        if len(nxt) == len(current):
            break
        current = nxt
        dims.append(len(current))
    return dims


def classify_structure(a: LieAlgebra) -> Structure:
    if a.is_abelian():
        return Structure.ABELIAN
    if lower_central_series(a)[-1] == 0:
        return Structure.NILPOTENT
    if derived_series(a)[-1] == 0:
        return Structure.SOLVABLE
    return Structure.NON_SOLVABLE


def center_dimension(a: LieAlgebra) -> int:
    """Dimension of the center, i.e. the kernel of ``ad``."""
    n = a.dim
    # row block for each basis e_j: the map x -> [x, e_j]
    rows = []
    for j in range(n):
        adj = Matrix([a.bracket(_unit(n, i), _unit(n, j)) for i in range(n)]).T
        rows.extend(adj.tolist())
    return n - mat_rank(Matrix(rows))

