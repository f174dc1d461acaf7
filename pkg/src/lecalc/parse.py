"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant, ``#`` starts a comment running to end of
line)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ['^' NAT]
    base     := IDENT | RATIONAL | '(' expr ')'
    RATIONAL := NAT ['/' NAT]

The optional leading minus is a deliberate extension so that printing a
polynomial always yields a string this parser accepts again.  Identifiers
must be declared in the context, either as ring variables or as parameters;
anything else is an error carrying the character position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Context, Polynomial

_TOKEN_RE = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
                       r"|(?P<op>[-+*^()/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos] == "#":
            nl = text.find("\n", pos)
            if nl < 0:
                break
            pos = nl + 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                             len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens, context: Context):
        self.tokens = tokens
        self.i = 0
        self.ctx = context

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = kind == "op" and val == "-"
        if negate:
            self.advance()
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.peek()
            if kind != "nat":
                raise ParseError("exponent must be a natural number literal", pos)
            self.advance()
            p = p ** int(val)
        return p

    def base(self) -> Polynomial:
        kind, val, pos = self.advance()
        if kind == "nat":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.advance()
                kind3, val3, pos3 = self.peek()
                if kind3 != "nat":
                    raise ParseError("expected denominator after '/'", pos3)
                self.advance()
                den = int(val3)
                if den == 0:
                    raise ParseError("zero denominator", pos3)
                return Polynomial.constant(self.ctx, Fraction(num, den))
            return Polynomial.constant(self.ctx, num)
        if kind == "ident":
            if val in self.ctx.variables:
                return Polynomial.variable(self.ctx, val)
            if val in self.ctx.parameters:
                return Polynomial.parameter(self.ctx, val)
            raise ParseError(f"undeclared identifier {val!r}", pos)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        shown = val if val else "end of input"
        raise ParseError(f"expected a variable, number or '(' but found {shown!r}", pos)


def parse_polynomial(text: str, context: Context) -> Polynomial:
    """Parse an expression into a Polynomial over the given context."""
    return _Parser(_tokenize(text), context).parse()
