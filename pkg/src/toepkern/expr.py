"""Recursive-descent parser for symbol expressions.

Grammar (whitespace insensitive)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('-')* base ('^' int)?
    base    := 'z' | complex | 'B(' expr ')' | 'bar(' expr ')' | '(' expr ')'
    complex := number 'i'? | 'i'        e.g.  0.3   2i   0.3-0.4i

``bar`` is boundary conjugation; on the rational field it is evaluated
eagerly via the reflection identity, so ``bar(bar(e))`` collapses to ``e``
(the parser also normalizes the double bar away structurally).  ``B(c)``
takes any constant subexpression with |c| < 1 and builds the Blaschke
factor vanishing at c.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .blaschke import BlaschkeProduct
from .errors import ParseError
from .ratfun import RF_Z, RationalFunction, boundary_conjugate

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i?|i)"
    r"|(?P<name>bar|B|z)"
    r"|(?P<op>[-+*/^(),]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise ParseError("unexpected character %r" % text[bad_pos], bad_pos)
        if m.group("num") is not None:
            tokens.append(Token("num", m.group("num"), m.start("num")))
        elif m.group("name") is not None:
            tokens.append(Token("name", m.group("name"), m.start("name")))
        else:
            tokens.append(Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# -- AST ---------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    pos: int


@dataclass(frozen=True)
class Lit:
    value: complex
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int


@dataclass(frozen=True)
class Bar:
    arg: object
    pos: int


@dataclass(frozen=True)
class BlaschkeFactor:
    arg: object
    pos: int


SymbolExpr = (Var, Lit, BinOp, Neg, Pow, Bar, BlaschkeFactor)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            return self.advance()
        raise ParseError("expected %r" % op, tok.pos, expected=(op,))

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            tok = self.advance()
            rhs = self.parse_term()
            node = BinOp(tok.text, node, rhs, tok.pos)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.advance()
            rhs = self.parse_factor()
            node = BinOp(tok.text, node, rhs, tok.pos)
        return node

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.parse_factor(), tok.pos)
        node = self.parse_base()
        if self.peek().kind == "op" and self.peek().text == "^":
            op = self.advance()
            sign = 1
            if self.peek().kind == "op" and self.peek().text == "-":
                self.advance()
                sign = -1
            tok = self.peek()
            if tok.kind != "num" or not re.fullmatch(r"\d+", tok.text):
                raise ParseError("expected integer exponent", tok.pos, expected=("int",))
            self.advance()
            node = Pow(node, sign * int(tok.text), op.pos)
        return node

    def parse_base(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Lit(_parse_number(tok.text), tok.pos)
        if tok.kind == "name":
            if tok.text == "z":
                self.advance()
                return Var(tok.pos)
            if tok.text == "bar":
                self.advance()
                self.expect_op("(")
                inner = self.parse_expr()
                self.expect_op(")")
                return Bar(inner, tok.pos)
            if tok.text == "B":
                self.advance()
                self.expect_op("(")
                inner = self.parse_expr()
                self.expect_op(")")
                return BlaschkeFactor(inner, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(
            "expected 'z', a number, 'B(', 'bar(' or '('",
            tok.pos,
            expected=("z", "number", "B(", "bar(", "("),
        )


def _parse_number(text):
    if text == "i":
        return 1j
    if text.endswith("i"):
        return complex(0.0, float(text[:-1]))
    return complex(float(text), 0.0)


def _normalize(node):
    """Collapse bar(bar(e)) structurally."""
    if isinstance(node, Bar):
        inner = _normalize(node.arg)
        if isinstance(inner, Bar):
            return inner.arg
        return Bar(inner, node.pos)
    if isinstance(node, BinOp):
        return BinOp(node.op, _normalize(node.left), _normalize(node.right), node.pos)
    if isinstance(node, Neg):
        return Neg(_normalize(node.arg), node.pos)
    if isinstance(node, Pow):
        return Pow(_normalize(node.base), node.exponent, node.pos)
    if isinstance(node, BlaschkeFactor):
        return BlaschkeFactor(_normalize(node.arg), node.pos)
    return node


def parse(text):
    """Parse a symbol expression to its AST; raises `ParseError` with the
    offending position on bad input."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError("trailing input %r" % tok.text, tok.pos)
    return _normalize(node)


def evaluate(node):
    """Evaluate an AST to a RationalFunction."""
    if isinstance(node, Var):
        return RF_Z
    if isinstance(node, Lit):
        return RationalFunction([node.value])
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, BinOp):
        lhs, rhs = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return lhs + rhs
        if node.op == "-":
            return lhs - rhs
        if node.op == "*":
            return lhs * rhs
        if rhs.is_zero:
            raise ParseError("division by zero", node.pos)
        return lhs / rhs
    if isinstance(node, Pow):
        base = evaluate(node.base)
        if node.exponent < 0 and base.is_zero:
            raise ParseError("zero raised to a negative power", node.pos)
        return base ** node.exponent
    if isinstance(node, Bar):
        return boundary_conjugate(evaluate(node.arg))
    if isinstance(node, BlaschkeFactor):
        val = evaluate(node.arg)
        if not val.is_constant:
            raise ParseError("B() argument must be a constant", node.pos)
        c = val.constant_value()
        if abs(c) >= 1.0:
            raise ParseError("B() argument must satisfy |c| < 1", node.pos)
        return BlaschkeProduct(1.0, (c,)).to_rational()
    raise TypeError("not an AST node: %r" % (node,))


def parse_symbol(text):
    """Parse and evaluate in one step."""
    return evaluate(parse(text))
