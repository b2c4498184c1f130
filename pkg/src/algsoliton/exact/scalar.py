"""Exact scalars: rationals and rational functions in one parameter.

Parameter-free values are plain :class:`fractions.Fraction` objects
throughout the package. :class:`ParamScalar` is only needed when a value
depends on a symbolic parameter; it interoperates with ``int`` and
``Fraction`` operands and compares equal to them when constant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .poly import Poly, format_poly, poly_gcd

_ONE = Poly((1,))


class ParamScalar:
    """Canonical quotient ``num/den`` of polynomials in a single parameter.

    Canonical means ``gcd(num, den) == 1`` and ``den`` is monic, so two
    equal values always have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly((num,))
        den = _ONE if den is None else (den if isinstance(den, Poly) else Poly((den,)))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num._var_with(den)
        if num.is_zero():
            num, den = Poly._raw((), None), _ONE
        elif den.degree == 0:
            num, den = num.scale(1 / den.lc), _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        s.num = num
        s.den = den
        return s

    @classmethod
    def param(cls, name: str) -> "ParamScalar":
        return cls._raw(Poly.x(name), _ONE)

    # -- queries ---------------------------------------------------------
    @property
    def var(self) -> str | None:
        return self.num.var or self.den.var

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on parameter {self.var!r}")
        return self.num.constant_value()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, ParamScalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.num.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.constant_value())
        return hash((self.num, self.den))

    def __call__(self, t):
        """Evaluate at a number; raises ZeroDivisionError at a pole."""
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {t}")
        return self.num(t) / d

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamScalar._raw(Poly._raw((Fraction(x),), None) if x else Poly._raw((), None), _ONE)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            return self
        if not self:
            return o
        if self.den.is_constant() and o.den.is_constant():
            return ParamScalar._raw(self.num + o.num, _ONE)
        if self.den == o.den:
            return ParamScalar(self.num + o.num, self.den)
        return ParamScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamScalar._raw(Poly._raw((), None), _ONE)
            return ParamScalar._raw(self.num.scale(other), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self or not o:
            return ParamScalar._raw(Poly._raw((), None), _ONE)
        if self.den.is_constant() and o.den.is_constant():
            return ParamScalar._raw(self.num * o.num, _ONE)
        return ParamScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "ParamScalar":
        if not self:
            raise ZeroDivisionError("division by the zero rational function")
        return ParamScalar(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ParamScalar._raw(self.num ** k, self.den ** k)

    def substitute(self, value) -> Fraction:
        return Fraction(self(Fraction(value)))

    def __float__(self):
        return float(self.constant_value())

    def __repr__(self):
        return f"ParamScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, ParamScalar]


def simplify(x) -> Scalar:
    """Demote constant rational functions to Fraction, leave others alone."""
    if isinstance(x, ParamScalar):
        return x.num.constant_value() if x.is_constant() else x
    return Fraction(x)


def as_param(x) -> ParamScalar:
    if isinstance(x, ParamScalar):
        return x
    return ParamScalar._coerce(Fraction(x))


def is_zero(x) -> bool:
    return not x


def scalar_var(x) -> str | None:
    return x.var if isinstance(x, ParamScalar) else None


def substitute(x, name: str, value) -> Scalar:
    """Replace parameter ``name`` by a rational ``value``."""
    if isinstance(x, ParamScalar) and x.var == name:
        return x.substitute(value)
    return x


def format_scalar(x) -> str:
    """Render a scalar in the expression grammar accepted by parse_scalar."""
    if not isinstance(x, ParamScalar):
        q = Fraction(x)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if x.den.is_constant():
        return format_poly(x.num)
    var = x.var
    num = format_poly(x.num, var)
    if not (x.num.is_constant() and x.num.lc.denominator == 1):
        num = f"({num})"
    den = format_poly(x.den, var)
    if sum(1 for c in x.den.coeffs if c) > 1:
        den = f"({den})"
    return f"{num}/{den}"
