"""Exact scalars, polynomials, matrices and the scalar-expression parser."""

from .matrix import (
    Matrix,
    SolveResult,
    mat_det,
    mat_inverse,
    mat_nullspace,
    mat_rank,
    mat_rref,
    mat_solve,
)
from .parser import parse_scalar
from .poly import Poly, poly_gcd, poly_rational_roots
from .scalar import ParamScalar, as_param, format_scalar, simplify, substitute

__all__ = [
    "Matrix", "SolveResult", "mat_det", "mat_inverse", "mat_nullspace", "mat_rank",
    "mat_rref", "mat_solve", "parse_scalar", "Poly", "poly_gcd", "poly_rational_roots",
    "ParamScalar", "as_param", "format_scalar", "simplify", "substitute",
]
