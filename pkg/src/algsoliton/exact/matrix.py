"""Immutable dense matrices over exact scalars and the usual linear algebra."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from ..errors import DimensionMismatch, ParameterError, SingularMatrix
from .scalar import ParamScalar, simplify


def _exact(x):
    if isinstance(x, ParamScalar):
        return simplify(x)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"inexact matrix entry {x!r}")


class Matrix:
    """Row-major ``rows x cols`` matrix with Fraction/ParamScalar entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_exact(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatch("matrix must have positive size")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatch("ragged rows")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def _wrap(cls, data):
        m = object.__new__(cls)
        m.rows, m.cols, m._data = len(data), len(data[0]), data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[r * cols:(r + 1) * cols] for r in range(rows)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def flat(self):
        return [x for r in self._data for x in r]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix([{body}])"

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self._data)))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    def is_parameter_free(self):
        return not any(isinstance(x, ParamScalar) for r in self._data for x in r)

    def trace(self):
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return simplify(sum((self._data[i][i] for i in range(self.rows)), Fraction(0)))

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self._data])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._wrap(tuple(
            tuple(simplify(a + b) for a, b in zip(ra, rb))
            for ra, rb in zip(self._data, other._data)
        ))

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-x for x in r) for r in self._data))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return Matrix._wrap(tuple(tuple(simplify(x * c) for x in r) for r in self._data))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c) if not isinstance(c, ParamScalar) else c.inverse())

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = other.T._data
            return Matrix._wrap(tuple(
                tuple(_dot(r, c) for c in cols) for r in self._data
            ))
        vec = tuple(other)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(vec)}")
        return tuple(_dot(r, vec) for r in self._data)


def _dot(a, b):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return simplify(acc)


def _require_rational(m: Matrix):
    if not m.is_parameter_free():
        raise ParameterError("operation requires a parameter-free matrix")


class SolveResult(NamedTuple):
    x: tuple
    unique: bool


def _rref_rows(rows, ncols, rhs=None):
    """In-place Gauss-Jordan elimination; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            if rhs is not None:
                rhs[r], rhs[p] = rhs[p], rhs[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        if rhs is not None:
            rhs[r] = rhs[r] * inv
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                ri = rows[r]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], ri)]
                if rhs is not None:
                    rhs[i] = rhs[i] - f * rhs[r]
        pivots.append(c)
        r += 1
    return pivots


def mat_rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    _require_rational(m)
    rows = m.tolist()
    pivots = _rref_rows(rows, m.cols)
    return Matrix._wrap(tuple(tuple(r) for r in rows)), pivots


def mat_rank(m: Matrix) -> int:
    return len(mat_rref(m)[1])


def mat_nullspace(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace, each vector scaled so its first nonzero entry is 1."""
    r, pivots = mat_rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row, f]
        lead = next(x for x in v if x)
        basis.append(tuple(x / lead for x in v))
    return basis


def mat_solve(a: Matrix, b: Sequence) -> SolveResult | None:
    """One exact solution of ``a x = b``, or None when inconsistent.

    Free variables are set to zero; ``unique`` reports whether there were any.
    """
    _require_rational(a)
    b = [Fraction(x) for x in b]
    if len(b) != a.rows:
        raise DimensionMismatch(f"matrix has {a.rows} rows, right-hand side {len(b)}")
    rows = a.tolist()
    pivots = _rref_rows(rows, a.cols, b)
    if any(b[i] for i in range(len(pivots), a.rows)):
        return None
    x = [Fraction(0)] * a.cols
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return SolveResult(tuple(x), len(pivots) == a.cols)


def mat_det(m: Matrix):
    if not m.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = m.tolist()
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[c])]
    return simplify(det)


def mat_inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.tolist())]
    pivots = _rref_rows(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix([r[n:] for r in rows])
