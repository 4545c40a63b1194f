"""A tiny expression language for closed forms over pi, Gamma(1/4) and K, E, ...

Grammar (whitespace insignificant, symbols case-sensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := ['-'] base ['^' exponent]
    base     := NUMBER | 'pi' | 'gamma4' | 'K' | 'E' | 'Kp' | 'Ep' | 'k' | 'kp'
              | 'q' | 'sqrt' '(' expr ')' | '(' expr ')'
    exponent := INTEGER | '(' INTEGER '/' INTEGER ')'
    NUMBER   := INTEGER | INTEGER '/' INTEGER

An integer immediately followed by ``/`` and another integer is read as one
rational literal, so ``K/1/4`` is ``K / (1/4)`` and ``2/3^2`` is ``(2/3)^2``.
A leading minus binds looser than ``^``: ``-k^2`` is ``-(k^2)``.
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ellipsum.errors import EvaluationError, ParseError, UnknownSymbolError

CONSTANTS = ("pi", "gamma4")
CONTEXT_SYMBOLS = ("K", "E", "Kp", "Ep", "k", "kp", "q")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction


@dataclass(frozen=True)
class Sqrt:
    operand: "Expr"


Expr = Union[Num, Const, Sym, Neg, BinOp, Pow, Sqrt]
ClosedFormExpr = Expr

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text: str):
    """(kind, text, char_offset) triples ending with an ``end`` token."""
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start()))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start()))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", len(text[:m.start()].encode()))
            tokens.append((ch, ch, m.start()))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", self._offset(tok))
        self.i += 1
        return tok

    def _offset(self, tok):
        return len(self.text[:tok[2]].encode())

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self._offset(tok))
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        node = self.base()
        if self.peek()[0] == "^":
            self.take()
            node = Pow(node, self.exponent())
        return Neg(node) if negate else node

    def exponent(self) -> Fraction:
        if self.peek()[0] == "(":
            self.take()
            num = int(self.take("int")[1])
            self.take("/")
            den_tok = self.take("int")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError("zero denominator in exponent", self._offset(den_tok))
            self.take(")")
            return Fraction(num, den)
        return Fraction(int(self.take("int")[1]))

    def base(self) -> Expr:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/" and self.peek(1)[0] == "int":
                self.take()
                den_tok = self.take()
                if int(den_tok[1]) == 0:
                    raise ParseError("zero denominator in literal", self._offset(den_tok))
                value = Fraction(int(tok[1]), int(den_tok[1]))
            return Num(value)
        if tok[0] == "name":
            self.take()
            name = tok[1]
            if name == "sqrt":
                self.take("(")
                inner = self.expr()
                self.take(")")
                return Sqrt(inner)
            if name in CONSTANTS:
                return Const(name)
            if name in CONTEXT_SYMBOLS:
                return Sym(name)
            raise UnknownSymbolError(f"unknown symbol {name!r}", self._offset(tok))
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", self._offset(tok))


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- rendering ---------------------------------------------------------------

def _ends_with_literal(node: Expr) -> bool:
    while True:
        if isinstance(node, Num):
            return True
        if isinstance(node, BinOp):
            node = node.right
        elif isinstance(node, Neg):
            node = node.operand
        else:
            return False


def _starts_with_literal(node: Expr) -> bool:
    while True:
        if isinstance(node, Num):
            return True
        if isinstance(node, BinOp):
            node = node.left
        elif isinstance(node, Pow):
            node = node.base
        else:
            return False


def _render_num(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _render_base(node: Expr) -> str:
    if isinstance(node, (Const, Sym, Sqrt)) or (isinstance(node, Num) and node.value.denominator == 1
                                                and node.value >= 0):
        return render(node)
    return f"({render(node)})"


def render(node: Expr) -> str:
    """Canonical text; ``parse(render(e)) == e`` for every parsed tree."""
    if isinstance(node, Num):
        return _render_num(node.value)
    if isinstance(node, (Const, Sym)):
        return node.name
    if isinstance(node, Sqrt):
        return f"sqrt({render(node.operand)})"
    if isinstance(node, Pow):
        e = node.exponent
        exp_text = str(e.numerator) if e.denominator == 1 else f"({e.numerator}/{e.denominator})"
        return f"{_render_base(node.base)}^{exp_text}"
    if isinstance(node, Neg):
        inner = node.operand
        if isinstance(inner, (BinOp, Neg)) or (isinstance(inner, Num) and inner.value < 0):
            return f"-({render(inner)})"
        return f"-{render(inner)}"
    # BinOp
    left, right = node.left, node.right
    if node.op in "+-":
        r = render(right)
        if isinstance(right, BinOp) and right.op in "+-":
            r = f"({r})"
        return f"{render(left)} {node.op} {r}"
    l_text = render(left)
    if isinstance(left, BinOp) and left.op in "+-":
        l_text = f"({l_text})"
    r_text = render(right)
    # "2*3/4" would re-read as 2 * (3/4): an integer literal must not follow
    # "/" directly after another literal
    if isinstance(right, BinOp) or (node.op == "/" and _ends_with_literal(left)
                                    and _starts_with_literal(right)):
        r_text = f"({r_text})"
    return f"{l_text}{node.op}{r_text}"


# -- evaluation --------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _gamma4() -> float:
    from ellipsum.singular import gamma_quarter
    return gamma_quarter()


def _context_value(name: str, ctx) -> float:
    if ctx is None:
        raise EvaluationError(f"symbol {name!r} needs an elliptic context")
    return {
        "K": ctx.K, "E": ctx.E, "Kp": ctx.K_prime, "Ep": ctx.E_prime,
        "k": ctx.k, "kp": ctx.k_prime, "q": ctx.q,
    }[name]


def _eval(node: Expr, ctx):
    # Fractions are kept exact until a transcendental or radical appears.
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Const):
        return math.pi if node.name == "pi" else _gamma4()
    if isinstance(node, Sym):
        return _context_value(node.name, ctx)
    if isinstance(node, Neg):
        return -_eval(node.operand, ctx)
    if isinstance(node, Sqrt):
        v = _eval(node.operand, ctx)
        if v < 0:
            raise EvaluationError(f"square root of negative value {float(v)!r}")
        return math.sqrt(v)
    if isinstance(node, Pow):
        b = _eval(node.base, ctx)
        e = node.exponent
        if e.denominator == 1:
            if b == 0 and e < 0:
                raise EvaluationError("zero raised to a negative power")
            if isinstance(b, Fraction):
                return b ** e.numerator
            return float(b) ** e.numerator
        if b < 0:
            raise EvaluationError(f"negative base {float(b)!r} with non-integer exponent {e}")
        return float(b) ** float(e)
    left = _eval(node.left, ctx)
    right = _eval(node.right, ctx)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0:
        raise EvaluationError("division by zero")
    return left / right


def evaluate(expr, ctx=None) -> float:
    """Numeric value of an expression (or its source text) against a context."""
    if isinstance(expr, str):
        expr = parse(expr)
    return float(_eval(expr, ctx))


eval = evaluate  # noqa: A001 - mirrors the operation name


def symbols(expr: Expr) -> set[str]:
    """Names of the constants and context symbols used by ``expr``."""
    if isinstance(expr, (Const, Sym)):
        return {expr.name}
    if isinstance(expr, (Neg, Sqrt)):
        return symbols(expr.operand)
    if isinstance(expr, Pow):
        return symbols(expr.base)
    if isinstance(expr, BinOp):
        return symbols(expr.left) | symbols(expr.right)
    return set()
