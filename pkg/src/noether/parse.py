"""Recursive-descent parser for the polynomial input grammar.

Grammar: integer coefficients, variables matching ``[a-z][0-9]*``, binary
operators ``+ - * ^`` (also ``**``), unary minus, parentheses.  Whitespace
is insignificant.  ``^`` exponents must be non-negative integer literals.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .errors import ParseError
from .fields import FieldSpec
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][0-9]*)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", column=pos)
        if m.group(1):
            tokens.append(("int", m.group(1), m.start()))
        elif m.group(2):
            tokens.append(("var", m.group(2), m.start()))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, m.start()))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, field: FieldSpec, var_names):
        self.tokens = tokens
        self.i = 0
        self.field = field
        self.var_names = list(var_names)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}, found {tok[1]!r}", column=tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input at {tok[1]!r}", column=tok[2])
        return p

    def expr(self) -> Polynomial:
        # sum of signed terms
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p - q if tok[1] == "-" else p + q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.power()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self.take()
                p = p * self.power()
            else:
                return p

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "int":
                raise ParseError("exponent must be an integer literal", column=etok[2])
            return base ** int(etok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        nvars = len(self.var_names)
        if tok[0] == "int":
            return Polynomial.const(self.field, nvars, int(tok[1]))
        if tok[0] == "var":
            if tok[1] not in self.var_names:
                raise ParseError(f"unknown variable {tok[1]!r}", column=tok[2])
            return Polynomial.var(self.field, nvars, self.var_names.index(tok[1]))
        if tok[0] == "op" and tok[1] == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if tok[0] == "op" and tok[1] == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {tok[1]!r}", column=tok[2])


def parse_polynomial(text: str, field: FieldSpec, var_names) -> Polynomial:
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial text")
    return _Parser(_tokenize(text), field, var_names).parse()
