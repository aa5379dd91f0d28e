"""Text syntax for polynomials: ``Z[i,j]`` generators, ``q``/``q^-1`` scalars, ``+ - * ^`` and parens.

Precedence from tightest: ``^`` (natural-number exponent), unary ``-``,
``*`` (noncommutative on generators; scalars commute), binary ``+``/``-``.
``q^-k`` is a single token, so negative powers only ever apply to ``q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .freealg import NCPoly
from .qlaurent import QMode, LaurentPoly, lp_eval

__all__ = ["ParseError", "Expr", "parse_expr", "parse_poly", "evaluate"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>Z\[\s*(?P<row>-?\d+)\s*,\s*(?P<col>-?\d+)\s*\])
  | (?P<qpow>q\^-(?P<qexp>\d+))
  | (?P<q>q)
  | (?P<frac>\d+/\d+)
  | (?P<int>\d+)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


_KINDS = ("ws", "gen", "qpow", "q", "frac", "int", "op")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = next(k for k in _KINDS if m.group(k) is not None)
        if kind != "ws":
            out.append(Token(kind, m.group(0), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- AST ------------------------------------------------------------------


class Expr:
    pass


@dataclass(frozen=True)
class Gen(Expr):
    row: int
    col: int


@dataclass(frozen=True)
class Scalar(Expr):
    value: LaurentPoly


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = tokenize(text)
        self.k = 0
        self.n = n

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def take(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect(self, text: str) -> None:
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        self.take()

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.sum()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def sum(self) -> Expr:
        e = self.product()
        while self.tok.text in ("+", "-"):
            op = self.take().text
            e = BinOp(op, e, self.product())
        return e

    def product(self) -> Expr:
        e = self.unary()
        while self.tok.text == "*":
            self.take()
            e = BinOp("*", e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.tok.text == "-":
            self.take()
            return Neg(self.unary())
        if self.tok.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.text == "^":
            self.take()
            t = self.tok
            if t.text == "-":
                raise ParseError("negative exponents are only allowed as q^-k", t.pos)
            if t.kind != "int":
                raise ParseError("exponent must be a natural number", t.pos)
            self.take()
            base = Pow(base, int(t.text))
            if self.tok.text == "^":
                raise ParseError("chained exponents need parentheses", self.tok.pos)
        return base

    def atom(self) -> Expr:
        t = self.take()
        if t.kind == "gen":
            m = _TOKEN.match(t.text)
            i, j = int(m.group("row")), int(m.group("col"))
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ParseError(f"generator index out of range for n={self.n}: {t.text}", t.pos)
            return Gen(i, j)
        if t.kind == "q":
            return Scalar(LaurentPoly.monomial(1, 1))
        if t.kind == "qpow":
            return Scalar(LaurentPoly.monomial(1, -int(t.text[3:])))
        if t.kind in ("int", "frac"):
            try:
                return Scalar(LaurentPoly.const(Fraction(t.text)))
            except ZeroDivisionError:
                raise ParseError("zero denominator", t.pos) from None
        if t.text == "(":
            e = self.sum()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)


def parse_expr(text: str, n: int) -> Expr:
    return _Parser(text, n).parse()


def evaluate(e: Expr) -> NCPoly:
    if isinstance(e, Gen):
        return NCPoly.gen(e.row, e.col)
    if isinstance(e, Scalar):
        return NCPoly.scalar(e.value)
    if isinstance(e, Neg):
        return -evaluate(e.arg)
    if isinstance(e, Pow):
        return evaluate(e.base) ** e.exponent
    if isinstance(e, BinOp):
        a, b = evaluate(e.left), evaluate(e.right)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        return a * b
    raise TypeError(f"not an expression node: {e!r}")


def parse_poly(text: str, n: int, mode: QMode | None = None) -> NCPoly:
    p = evaluate(parse_expr(text, n))
    if mode is not None and not mode.generic:
        p = p.map_coefficients(lambda c: lp_eval(c, mode))
    return p
