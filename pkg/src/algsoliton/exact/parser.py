"""Recursive-descent parser for scalar expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ['-'] atom ['^' nonneg-integer]
    atom   := integer | parameter-name | '(' expr ')'

A leading minus binds looser than the power, so ``-h^2`` is ``-(h^2)``.
"""

from __future__ import annotations

import re

from ..errors import ParseError, UnknownParameter
from .poly import Poly
from .scalar import ParamScalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    def __init__(self, text: str, allowed_param: str | None):
        self.text = text
        self.allowed = allowed_param
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{message}, found {found}", tok[2])

    def parse(self) -> ParamScalar:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        value = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.factor()
            if op_tok[1] == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero", op_tok[2])
                value = value / rhs
        return value

    def factor(self):
        negate = False
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            negate = True
        value = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("expected non-negative integer exponent")
            self.take()
            value = value ** int(tok[1])
        return -value if negate else value

    def atom(self):
        tok = self.peek()
        kind, text, pos = tok
        if kind == "int":
            self.take()
            return ParamScalar(int(text))
        if kind == "name":
            self.take()
            if text != self.allowed:
                raise UnknownParameter(f"unknown parameter {text!r}", pos)
            return ParamScalar(Poly.x(text))
        if kind == "op" and text == "(":
            self.take()
            value = self.expr()
            if self.peek()[1] != ")" or self.peek()[0] != "op":
                self.error("expected ')'")
            self.take()
            return value
        self.error("expected integer, parameter or '('")


def parse_scalar(text: str, allowed_param: str | None = None) -> ParamScalar:
    """Parse ``text`` into a canonical :class:`ParamScalar`.

    >>> str(parse_scalar("-8/h + 1/2", "h"))
    '(1/2*h-8)/h'
    """
    return _Parser(text, allowed_param).parse()
