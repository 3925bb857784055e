"""Polynomial expression parser.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := literal | var | '(' expr ')'

``*`` is noncommutative and the tree keeps operand order exactly as written;
normalization is left to :mod:`skewpbw.algebra`.  Literals are kept as text
and handed to the coefficient ring at evaluation time, so one tree can be
evaluated over different rings.  Recognised literal shapes: naturals, ``#k``
element indices, ``t`` (the indeterminate of Z_p[t]), tuples ``(a,b)``,
brackets ``[a,t]`` and calls ``ident(...)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import SkewPoly, SkewPresentation
from .errors import LiteralError, ParseError


@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


Node = Literal | Var | Neg | Add | Sub | Mul | Pow


@dataclass(frozen=True)
class Token:
    kind: str  # NAT LIT VAR OP LPAREN RPAREN END
    text: str
    pos: int


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VAR = re.compile(r"x([1-9][0-9]*)$")


def _closing(text: str, start: int) -> int:
    """Index of the bracket closing the one at ``start``."""
    depth = 0
    for k in range(start, len(text)):
        if text[k] in "([":
            depth += 1
        elif text[k] in ")]":
            depth -= 1
            if depth == 0:
                return k
    raise ParseError("unbalanced bracket", start)


def _has_top_comma(text: str) -> bool:
    depth = 0
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return True
    return False


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("NAT", text[i:j], i))
            i = j
        elif ch == "#":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("'#' must be followed by an element index", i)
            toks.append(Token("LIT", text[i:j], i))
            i = j
        elif ch == "[":
            j = _closing(text, i)
            toks.append(Token("LIT", "".join(text[i:j + 1].split()), i))
            i = j + 1
        elif ch == "(":
            j = _closing(text, i)
            if _has_top_comma(text[i + 1:j]):
                toks.append(Token("LIT", "".join(text[i:j + 1].split()), i))
                i = j + 1
            else:
                toks.append(Token("LPAREN", "(", i))
                i += 1
        elif ch == ")":
            toks.append(Token("RPAREN", ")", i))
            i += 1
        elif ch in "+-*^":
            toks.append(Token("OP", ch, i))
            i += 1
        else:
            m = _IDENT.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", i)
            word, j = m.group(), m.end()
            if j < n and text[j] == "(":
                k = _closing(text, j)
                toks.append(Token("LIT", "".join(text[i:k + 1].split()), i))
                i = k + 1
                continue
            v = _VAR.match(word)
            if v:
                toks.append(Token("VAR", v.group(1), i))
            elif word == "t":
                toks.append(Token("LIT", "t", i))
            else:
                raise ParseError(f"unknown identifier {word!r}; variables are x1..xn", i)
            i = j
    toks.append(Token("END", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in ops

    def parse(self) -> Node:
        if self.peek().kind == "END":
            raise ParseError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.take().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at_op("*"):
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Node:
        if self.at_op("-"):
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.at_op("^"):
            self.take()
            tok = self.take()
            if tok.kind != "NAT":
                raise ParseError("exponent must be a natural number", tok.pos)
            node = Pow(node, int(tok.text))
        return node

    def atom(self) -> Node:
        tok = self.take()
        if tok.kind in ("NAT", "LIT"):
            return Literal(tok.text)
        if tok.kind == "VAR":
            return Var(int(tok.text))
        if tok.kind == "LPAREN":
            node = self.expr()
            close = self.take()
            if close.kind != "RPAREN":
                raise ParseError("expected ')'", close.pos)
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse(text: str) -> Node:
    return _Parser(text).parse()


# rendering ---------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4, Literal: 5, Var: 5}


def render(node: Node) -> str:
    """Fully determined text: ``parse(render(t)) == t`` for every tree."""
    if isinstance(node, Literal):
        return node.text
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Neg):
        inner = render(node.arg)
        return f"-{inner}" if _PREC[type(node.arg)] >= 3 else f"-({inner})"
    if isinstance(node, Pow):
        inner = render(node.base)
        if _PREC[type(node.base)] < 5:
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    op = {Add: " + ", Sub: " - ", Mul: "*"}[type(node)]
    prec = _PREC[type(node)]
    left = render(node.left)
    right = render(node.right)
    if _PREC[type(node.left)] < prec:
        left = f"({left})"
    # left-associative: an equal-precedence right operand needs brackets
    if _PREC[type(node.right)] <= prec:
        right = f"({right})"
    return left + op + right


# evaluation --------------------------------------------------------------------


def evaluate(node: Node, p: SkewPresentation) -> SkewPoly:
    if isinstance(node, Literal):
        try:
            return p.const(p.ring.parse(node.text))
        except LiteralError as exc:
            raise ParseError(str(exc)) from None
    if isinstance(node, Var):
        if not 1 <= node.index <= p.n:
            raise ParseError(f"x{node.index} out of range; this extension has x1..x{p.n}")
        return p.var(node.index)
    if isinstance(node, Neg):
        return -evaluate(node.arg, p)
    if isinstance(node, Pow):
        return evaluate(node.base, p) ** node.exponent
    left = evaluate(node.left, p)
    right = evaluate(node.right, p)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    return left * right


def normalize(text: str, p: SkewPresentation) -> SkewPoly:
    return evaluate(parse(text), p)


__all__ = ["Literal", "Var", "Neg", "Add", "Sub", "Mul", "Pow", "Token", "tokenize", "parse",
           "render", "evaluate", "normalize"]
