"""Parser for polynomial expressions with exact rational coefficients.

Grammar (whitespace insensitive)::

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor (["*"] factor)*     # "*" may be omitted before "("
    factor := atom (("^" | "**") INT)?
    atom   := NUMBER ["/" NUMBER] | VARIABLE | "(" expr ")"

A leading "-" also applies inside parentheses, e.g. ``(-1/2)*x2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..algebra.poly import PolyRing, WPolynomial
from ..errors import ParseError, UnknownVariable
from ..wps import RING

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<pow>\*\*|\^)"
    r"|(?P<op>[-+*/()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind if kind != "op" else chunk, chunk, line, column))
        for ch in chunk:
            if ch == "\n":
                line += 1
                column = 1
            else:
                column += 1
        pos = m.end()
    tokens.append(Token("end", "", line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], ring: PolyRing):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def advance(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        return self.advance()

    def parse(self) -> WPolynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return p

    def expr(self) -> WPolynomial:
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        total = self.term() * sign
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> WPolynomial:
        p = self.factor()
        while True:
            if self.tok.kind == "*":
                self.advance()
                p = p * self.factor()
            elif self.tok.kind == "(":
                p = p * self.factor()
            else:
                return p

    def factor(self) -> WPolynomial:
        base = self.atom()
        if self.tok.kind == "pow":
            self.advance()
            t = self.expect("num")
            base = base ** int(t.text)
        return base

    def atom(self) -> WPolynomial:
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.kind == "/":
                self.advance()
                d = self.expect("num")
                if int(d.text) == 0:
                    raise self.error("division by zero", d)
                value = value / int(d.text)
            return self.ring.const(value)
        if t.kind == "name":
            self.advance()
            if t.text not in self.ring.variables:
                raise UnknownVariable(
                    f"unknown variable {t.text!r} (expected one of {', '.join(self.ring.variables)})",
                    t.line, t.column,
                )
            return self.ring.gen(t.text)
        if t.kind == "(":
            self.advance()
            p = self.expr()
            self.expect(")")
            return p
        if t.kind == "-":
            # unary minus inside a product, e.g. x1*-2
            self.advance()
            return -self.factor()
        found = t.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_polynomial(text: str, ring: PolyRing = RING, line: int = 1, column: int = 1) -> WPolynomial:
    """Parse ``text`` into a polynomial of ``ring`` (default: P(1,1,2,2,3))."""
    return _Parser(tokenize(text, line, column), ring).parse()


@dataclass(frozen=True)
class Record:
    text: str
    line: int


def split_records(text: str) -> Iterator[Record]:
    """Records of a batch file: blocks separated by blank lines; ``#``
    starts a comment running to the end of the line."""
    block: list[str] = []
    start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            if start is None:
                start = lineno
            block.append(body)
        elif block and not raw.strip():
            yield Record("\n".join(block), start)
            block, start = [], None
    if block:
        yield Record("\n".join(block), start)
