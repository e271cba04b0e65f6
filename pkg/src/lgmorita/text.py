"""Polynomial text syntax: a recursive-descent parser and canonical printer.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := coefficient | variable ('^' posint)? | '(' expr ')' ('^' posint)? | '-' factor
    coefficient := digits ('/' digits)?
    variable := letter+ digit* "'"*

Trailing apostrophes give the prime level, so ``x1''`` is ``x1`` primed twice.
``print_polynomial`` writes terms in descending lex order and
``parse_polynomial(print_polynomial(p)) == p`` for every polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .errors import ParseError, UnknownToken
from .ring import Polynomial, Variable


class Token(NamedTuple):
    kind: str  # NUM, VAR, OP, END
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<var>[A-Za-z]+\d*'*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise UnknownToken(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind.upper(), m.group(), pos))
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        if self.tok.kind == "OP" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            raise ParseError(f"expected {op!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.tok.kind != "END":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.accept("*"):
            p = p * self.factor()
        return p

    def exponent(self) -> int:
        if not self.accept("^"):
            return 1
        tok = self.tok
        if tok.kind != "NUM" or "/" in tok.text:
            raise ParseError("exponent must be a positive integer", tok.pos)
        self.i += 1
        e = int(tok.text)
        if e < 1:
            raise ParseError("exponent must be a positive integer", tok.pos)
        return e

    def factor(self) -> Polynomial:
        tok = self.tok
        if self.accept("-"):
            return -self.factor()
        if self.accept("("):
            p = self.expr()
            self.expect(")")
            return p ** self.exponent()
        if tok.kind == "NUM":
            self.i += 1
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", tok.pos)
            return Polynomial.constant(Fraction(int(num), int(den)) if den else int(num))
        if tok.kind == "VAR":
            self.i += 1
            name = tok.text.rstrip("'")
            level = len(tok.text) - len(name)
            return Polynomial.var(Variable(name, level)) ** self.exponent()
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_polynomial(text: str) -> Polynomial:
    return _Parser(text).parse()


def _monomial_text(m) -> str:
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def print_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        negative = c < 0
        a = -c if negative else c
        if not m:
            body = str(a)
        elif a == 1:
            body = _monomial_text(m)
        else:
            body = f"{a}*{_monomial_text(m)}"
        if k == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)
