"""Recursive-descent parser for external-number expressions.

Grammar (whitespace insignificant, ^ binds tighter than unary minus):

    expr     := term (("+"|"-") term)*
    term     := factor (("*"|"/") factor)*
    factor   := "-"? atom ("^" int)?
    atom     := rational | "eps" | "M" "(" int ")" | "Mmax"
              | fn "(" expr ")" | "(" expr ")"
    fn       := "e" | "u" | "inv" | "abs" | "R"
    rational := int ("/" int)?
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at offset {pos}: {message}")
        self.pos = pos


# --- AST ---------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Eps:
    pass


@dataclass(frozen=True)
class Mag:
    index: int


@dataclass(frozen=True)
class MagMax:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Fn:
    name: str  # e u inv abs R
    arg: "Expr"


Expr = Union[Lit, Eps, Mag, MagMax, Neg, BinOp, Pow, Fn]

FUNCTIONS = ("e", "u", "inv", "abs", "R")


# --- Tokenizer ----------------------------------------------------------

_SYMBOLS = "+-*/^()"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", or the symbol itself
    text: str
    pos: int


def _tokenize(source: str) -> List[_Token]:
    out = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            out.append(_Token("int", source[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and source[j].isalnum():
                j += 1
            out.append(_Token("name", source[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("eof", "", n))
    return out


# --- Parser -------------------------------------------------------------


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", tok.pos)
        return self.next()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError("unexpected trailing input", tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        neg = False
        if self.peek().kind == "-":
            self.next()
            neg = True
        node = self.atom()
        if self.peek().kind == "^":
            self.next()
            node = Pow(node, self.signed_int())
        return Neg(node) if neg else node

    def signed_int(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        tok = self.expect("int")
        return sign * int(tok.text)

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            num = int(tok.text)
            # maximal munch: int "/" int is a rational literal
            if self.peek().kind == "/" and self.tokens[self.i + 1].kind == "int":
                self.next()
                den_tok = self.next()
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator in rational", den_tok.pos)
                return Lit(Fraction(num, den))
            return Lit(Fraction(num))
        if tok.kind == "name":
            self.next()
            if tok.text == "eps":
                return Eps()
            if tok.text == "Mmax":
                return MagMax()
            if tok.text == "M":
                self.expect("(")
                index = self.signed_int()
                self.expect(")")
                return Mag(index)
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Fn(tok.text, arg)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError("expected a value", tok.pos)


def parse_expr(source: str) -> Expr:
    """Parse an expression, raising ParseError with a character offset."""
    return _Parser(source).parse()
