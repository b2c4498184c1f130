from fractions import Fraction as F
from sys import exc_info

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from algsoliton.errors import ParseError, SingularMatrix, UnknownParameter
from algsoliton.exact import (
    Matrix,
    ParamScalar,
    Poly,
    format_scalar,
    mat_det,
    mat_inverse,
    mat_nullspace,
    mat_rank,
    mat_rref,
    mat_solve,
    parse_scalar,
    poly_gcd,
    poly_rational_roots,
)
from algsoliton.exact.poly import format_poly

H = ParamScalar.param("h")
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys(draw, max_deg=3):
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=1, max_size=max_deg + 1))
    return Poly([F(c) for c in coeffs], "h")


@st.composite
def param_scalars(draw):
    num = draw(polys())
    den = draw(polys(max_deg=2))
    assume(den.degree >= 0)
    return ParamScalar(num, den)


# -- expression trees for the parser oracle ----------------------------------

@st.composite
def expressions(draw, depth=3):
    """(text, python-eval text) pairs; the second uses ** and explicit parentheses."""
    if depth == 0 or draw(st.booleans()):
        if draw(st.booleans()):
            return "h", "h"
        n = str(draw(st.integers(0, 30)))
        return n, f"F({n})"
    kind = draw(st.sampled_from(["+", "-", "*", "/", "^", "neg", "()"]))
    a, pa = draw(expressions(depth=depth - 1))
    if kind == "neg":
        return f"-({a})", f"-({pa})"
    if kind == "()":
        return f"({a})", f"({pa})"
    if kind == "^":
        k = draw(st.integers(0, 3))
        return f"({a})^{k}", f"({pa})**{k}"
    b, pb = draw(expressions(depth=depth - 1))
    return f"({a}){kind}({b})", f"({pa}){kind}({pb})"


@given(expressions(), st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_parser_matches_python_evaluation(expr, value):
    text, py = expr
    try:
        expected = eval(py, {"h": value, "F": F})  # Fraction arithmetic, independent of the parser
    except ZeroDivisionError:
        expected = None
    try:
        parsed = parse_scalar(text, "h")
    except ParseError:
        # division by an identically zero expression, e.g. 1/(h-h)
        assert "division by zero" in str(exc_info()[1])
        return
    if expected is None:
        return
    try:
        got = parsed(value) if isinstance(parsed, ParamScalar) else parsed
    except ZeroDivisionError:
        # a removable singularity: the canonical form cancelled it, python did not
        return
    assert F(got) == expected


@given(expressions(), st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_parser_float_evaluation(expr, x):
    text, py = expr
    try:
        parsed = parse_scalar(text, "h")
        expected = eval(py, {"h": x, "F": float})
        got = float(parsed.num(F(x))) / float(parsed.den(F(x)))
    except (ParseError, ZeroDivisionError, OverflowError):
        return
    assert got == pytest.approx(expected, rel=1e-6, abs=1e-6)


@pytest.mark.parametrize("text, value", [
    ("3/4", F(3, 4)),
    ("-2", F(-2)),
    ("1/2 - 1/3", F(1, 6)),
    ("2^3", F(8)),
    ("-2^2", F(-4)),
    ("(-2)^2", F(4)),
    ("2*3/4", F(3, 2)),
    ("7 - 2 - 1", F(4)),
])
def test_parse_constants(text, value):
    assert parse_scalar(text) == value


def test_parse_parameter_canonical_form():
    x = parse_scalar("-8/h + 1/2", "h")
    assert format_scalar(x) == "(1/2*h-8)/h"
    assert x(F(16)) == 0


@pytest.mark.parametrize("text, offset", [("(1", 2), ("1 +", 3), ("", 0), ("2 $ 3", 2), ("1 2", 2)])
def test_parse_error_offsets(text, offset):
    with pytest.raises(ParseError) as err:
        parse_scalar(text)
    assert err.value.position == offset


def test_unknown_parameter():
    with pytest.raises(UnknownParameter):
        parse_scalar("x + 1", "h")
    with pytest.raises(UnknownParameter):
        parse_scalar("h")


def test_division_by_zero():
    with pytest.raises(ParseError, match="division by zero") as err:
        parse_scalar("1/(2-2)")
    assert err.value.position == 1


@given(param_scalars())
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x), "h") == x


@given(rationals)
def test_format_parse_round_trip_rational(q):
    assert parse_scalar(format_scalar(q)) == q


# -- field axioms ------------------------------------------------------------

@given(param_scalars(), param_scalars(), param_scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(param_scalars())
def test_canonical_form(x):
    # monic denominator, coprime numerator and denominator
    assert x.den.lc == 1
    assert poly_gcd(x.num, x.den).degree <= 0 or x.num.degree < 0


@given(param_scalars(), rationals)
def test_evaluation_is_a_homomorphism(x, t):
    assume(x.den(t) != 0)
    y = x * x + 3
    assert y(t) == x(t) * x(t) + 3


def test_constant_scalar_equals_fraction():
    assert ParamScalar(Poly([F(3, 2)])) == F(3, 2)
    assert hash(ParamScalar(Poly([F(3, 2)]))) == hash(F(3, 2))
    assert (H - H) == 0


# -- polynomials -------------------------------------------------------------

@given(polys(), polys())
def test_divmod(a, b):
    assume(b.degree >= 0)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys(), polys())
def test_gcd_against_sympy(a, b):
    assume(a.degree >= 0 or b.degree >= 0)
    h = sympy.Symbol("h")
    sa = sympy.Poly(list(reversed(a.coeffs)) or [0], h, domain="QQ")
    sb = sympy.Poly(list(reversed(b.coeffs)) or [0], h, domain="QQ")
    expected = sympy.gcd(sa, sb).monic()
    got = poly_gcd(a, b)
    assert [F(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())] == list(got.coeffs)


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=4),
       st.integers(1, 5))
def test_rational_roots_recovered(roots, lead):
    p = Poly([F(lead)], "h")
    for r in roots:
        p = p * Poly([-r, 1], "h")
    assert poly_rational_roots(p) == sorted(roots)


def test_rational_roots_ignores_irrational_factor():
    p = Poly([-2, 0, 1], "h") * Poly([3, 1], "h")  # (h^2 - 2)(h + 3)
    assert poly_rational_roots(p) == [-3]


def test_format_poly():
    assert format_poly(Poly([F(-8), F(1, 2)], "h")) == "1/2*h-8"
    assert format_poly(Poly([0, 0, 1], "h")) == "h^2"


# -- matrices ----------------------------------------------------------------

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


def _sympy(rows):
    return sympy.Matrix(rows)


@given(small_matrices)
def test_rank_nullity(rows):
    m = Matrix(rows)
    null = mat_nullspace(m)
    assert mat_rank(m) + len(null) == m.cols
    for v in null:
        assert not any(m @ v)
    assert mat_rank(m) == _sympy(rows).rank()


@given(small_matrices)
def test_rref_against_sympy(rows):
    r, pivots = mat_rref(Matrix(rows))
    sr, spiv = _sympy(rows).rref()
    assert tuple(pivots) == tuple(spiv)
    assert [[F(int(x.p), int(x.q)) for x in sr.row(i)] for i in range(sr.rows)] == r.tolist()


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_and_inverse(rows):
    m = Matrix(rows)
    det = mat_det(m)
    assert det == int(_sympy(rows).det())
    if det:
        assert mat_inverse(m) @ m == Matrix.identity(len(rows))
    else:
        with pytest.raises(SingularMatrix):
            mat_inverse(m)


@given(small_matrices, st.data())
def test_solve_consistent_systems(rows, data):
    m = Matrix(rows)
    x0 = data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols))
    b = m @ x0
    sol = mat_solve(m, b)
    assert sol is not None
    assert m @ sol.x == b
    assert sol.unique == (mat_rank(m) == m.cols)


def test_solve_inconsistent():
    assert mat_solve(Matrix([[1, 1], [2, 2]]), [1, 3]) is None


def test_parameter_determinant():
    g = Matrix([[H, 0], [0, -1]])
    assert mat_det(g) == -H
    assert mat_inverse(g)[0, 0] == H.inverse()
