"""Parser and evaluator for curvature-profile expressions.

Profiles are univariate text expressions such as ``0.3 + 0.1*sin(s)``.  The
grammar is deliberately small and unambiguous:

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-'? power
    power  := atom ('^' factor)?
    atom   := number | const | var | func '(' expr ')' | '(' expr ')'

``^`` is right-associative and binds tighter than unary minus, so ``-2^2``
is ``-(2^2)``.  There is no implicit multiplication.  ``log`` is the
natural logarithm.  Known functions: sin cos tan sinh cosh tanh exp log
sqrt abs.  Known constants: pi, e.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "tanh": math.tanh,
    "exp": math.exp,
    "log": math.log,
    "sqrt": math.sqrt,
    "abs": abs,
}

CONSTANTS = {"pi": math.pi, "e": math.e}


class ExpressionError(ValueError):
    """Parse failure with the byte offset where it was detected."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EmptyInput(ExpressionError):
    pass


class UnknownIdentifier(ExpressionError):
    pass


class UnbalancedParens(ExpressionError):
    pass


class TrailingTokens(ExpressionError):
    pass


class InvalidToken(ExpressionError):
    pass


class DomainError(ValueError):
    """Evaluation hit a function outside its real domain."""


# AST nodes.  Parentheses group but do not create nodes, so a fully
# parenthesized pretty-print reparses to a structurally identical tree.


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Const, Neg, BinOp, Call]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _tokenize(source: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None or m.end() == m.start():
            stray = source[pos:].lstrip()
            if not stray:
                break
            raise InvalidToken(f"unexpected character {stray[0]!r}", len(source) - len(stray))
        for kind in ("num", "ident", "op"):
            text = m.group(kind)
            if text is not None:
                tokens.append((kind, text, m.start(kind)))
                break
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], var_name: str, source_len: int):
        self.tokens = tokens
        self.var_name = var_name
        self.source_len = source_len
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next_offset(self) -> int:
        tok = self.peek()
        return tok[2] if tok else self.source_len

    def accept_op(self, symbols: str):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in symbols:
            self.i += 1
            return tok[1]
        return None

    def expr(self) -> Node:
        node = self.term()
        while (op := self.accept_op("+-")) is not None:
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while (op := self.accept_op("*/")) is not None:
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        if self.accept_op("-"):
            return Neg(self.power())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.accept_op("^"):
            # Right-associative: the exponent is a full factor.
            return BinOp("^", base, self.factor())
        return base

    def atom(self) -> Node:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("expected a value", self.source_len)
        kind, text, offset = tok
        if kind == "num":
            self.i += 1
            return Num(float(text))
        if kind == "ident":
            self.i += 1
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "(":
                if text not in FUNCTIONS:
                    raise UnknownIdentifier(f"unknown function {text!r}", offset)
                self.i += 1
                arg = self.expr()
                if not self.accept_op(")"):
                    raise UnbalancedParens("missing ')'", self.next_offset())
                return Call(text, arg)
            if text == self.var_name:
                return Var()
            if text in CONSTANTS:
                return Const(text)
            raise UnknownIdentifier(f"unknown identifier {text!r}", offset)
        if text == "(":
            self.i += 1
            node = self.expr()
            if not self.accept_op(")"):
                raise UnbalancedParens("missing ')'", self.next_offset())
            return node
        if text == ")":
            raise UnbalancedParens("unmatched ')'", offset)
        raise ExpressionError(f"unexpected {text!r}", offset)


@dataclass(frozen=True)
class CurvatureProfile:
    """Parsed profile, evaluable at any point of its caller's domain."""

    source: str
    ast: Node
    var_name: str

    def __call__(self, t: float) -> float:
        return _eval(self.ast, float(t))

    def sample_values(self, points) -> "list[float]":
        return [_eval(self.ast, float(t)) for t in points]

    def pretty(self) -> str:
        """Fully parenthesized form; reparses to the identical AST."""
        return _pretty(self.ast, self.var_name)


def parse_profile(source: str, var_name: str = "s") -> CurvatureProfile:
    """Parse an expression with a single free variable ``var_name``."""
    tokens = _tokenize(source)
    if not tokens:
        raise EmptyInput("empty expression", 0)
    parser = _Parser(tokens, var_name, len(source))
    node = parser.expr()
    if parser.peek() is not None:
        raise TrailingTokens(f"unexpected trailing input {parser.peek()[1]!r}", parser.next_offset())
    return CurvatureProfile(source, node, var_name)


def _eval(node: Node, t: float) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return t
    if isinstance(node, Const):
        return CONSTANTS[node.name]
    if isinstance(node, Neg):
        return -_eval(node.operand, t)
    if isinstance(node, BinOp):
        a = _eval(node.left, t)
        b = _eval(node.right, t)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            if b == 0.0:
                raise DomainError(f"division by zero at t={t}")
            return a / b
        try:
            return float(a**b)
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            raise DomainError(f"{a}^{b} undefined at t={t}") from exc
    if isinstance(node, Call):
        arg = _eval(node.arg, t)
        if node.func == "log" and arg <= 0.0:
            raise DomainError(f"log of non-positive value {arg} at t={t}")
        if node.func == "sqrt" and arg < 0.0:
            raise DomainError(f"sqrt of negative value {arg} at t={t}")
        try:
            return float(FUNCTIONS[node.func](arg))
        except (ValueError, OverflowError) as exc:
            raise DomainError(f"{node.func}({arg}) undefined at t={t}") from exc
    raise TypeError(f"unknown node {node!r}")


def _pretty(node: Node, var_name: str) -> str:
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return var_name
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Neg):
        return f"(-{_pretty(node.operand, var_name)})"
    if isinstance(node, BinOp):
        return f"({_pretty(node.left, var_name)} {node.op} {_pretty(node.right, var_name)})"
    if isinstance(node, Call):
        return f"{node.func}({_pretty(node.arg, var_name)})"
    raise TypeError(f"unknown node {node!r}")
