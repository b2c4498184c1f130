"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial ``c0 + c1*x + ... + cd*x^d`` in one named variable.

    Coefficients are stored ascending with trailing zeros stripped, so the
    zero polynomial has an empty coefficient tuple. A constant polynomial
    carries no variable name; this lets constants mix freely with any
    parameter.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str | None = None):
        cs = _strip([Fraction(c) for c in coeffs])
        self.coeffs = cs
        self.var = var if len(cs) > 1 else None

    @classmethod
    def _raw(cls, coeffs, var):
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var if len(coeffs) > 1 else None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls, var: str) -> "Poly":
        return cls((0, 1), var)

    # -- queries ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.var == other.var
        if isinstance(other, (int, Fraction)):
            return len(self.coeffs) <= 1 and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_value())
        return hash((self.coeffs, self.var))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- arithmetic ------------------------------------------------------
    def _var_with(self, other: "Poly"):
        if self.var is None:
            return other.var
        if other.var is not None and other.var != self.var:
            raise ValueError(f"cannot combine parameters {self.var!r} and {other.var!r}")
        return self.var

    @staticmethod
    def _coerce(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly((x,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        var = self._var_with(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out), var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        var = self._var_with(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), None)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Poly._raw(_strip(out), var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly._raw((Fraction(1),), None)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw((), None)
        return Poly._raw(tuple(x * c for x in self.coeffs), self.var)

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        var = self._var_with(other)
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = 1 / other.lc
        if len(rem) - 1 < db:
            return Poly._raw((), None), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * inv_lc
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Poly._raw(_strip(quot), var), Poly._raw(_strip(rem[:db]), var)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def with_var(self, var: str | None) -> "Poly":
        return Poly._raw(self.coeffs, var)

    def primitive_integer(self) -> tuple[int, ...]:
        """Integer coefficients with content 1 and positive leading term."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no primitive form")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    # -- formatting ------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def format_poly(p: Poly, var: str | None = None) -> str:
    var = var or p.var or "x"
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _frac(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_frac(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_rational_roots(p: Poly | Sequence) -> list[Fraction]:
    """All rational roots of ``p`` with multiplicity, in ascending order.

    Candidates come from the rational root test on the primitive integer
    form; each root found is divided out so repeated roots are counted.
    """
    if not isinstance(p, Poly):
        p = Poly(p)
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots: list[Fraction] = []
    # strip the zero roots first so the constant term below is nonzero
    while p.coeffs and p.coeffs[0] == 0:
        roots.append(Fraction(0))
        p = Poly._raw(p.coeffs[1:], p.var)
    while p.degree > 0:
        ints = p.primitive_integer()
        found = None
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        p = p // Poly((-found, 1), p.var)
    return sorted(roots)
