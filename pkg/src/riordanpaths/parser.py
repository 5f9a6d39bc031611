"""Parser for generating-function expressions.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' natural)?
    base   := natural | 'x' | name | name '(' expr ')' | 'sqrt' '(' expr ')' | '(' expr ')'

``name`` refers to a series supplied by the caller; ``name(expr)`` composes
it with ``expr``.  Implicit multiplication is rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import OrderExceeded, ParseError
from .series import DEFAULT_ORDER, Series

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif sym in "+-*/^()":
            tokens.append(("op", sym, start))
        else:
            raise ParseError(f"unexpected character {sym!r} at position {start}")
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            found = val or "end of input"
            raise ParseError(f"expected {value!r} at position {pos}, found {found!r}")

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r} at position {pos} (implicit multiplication is not supported)")
        return node

    def expr(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            node = ("neg", self.term())
        else:
            node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError(f"exponent at position {pos} must be a natural number")
            node = ("pow", node, int(val))
        return node

    def base(self):
        kind, val, pos = self.take()
        if kind == "num":
            return ("num", int(val))
        if kind == "name":
            if val == "x":
                return ("x",)
            if self.peek()[:2] == ("op", "("):
                self.take()
                arg = self.expr()
                self.expect(")")
                return ("sqrt", arg) if val == "sqrt" else ("call", val, arg)
            if val == "sqrt":
                raise ParseError(f"sqrt at position {pos} needs a parenthesised argument")
            return ("sym", val)
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {val or 'end of input'!r} at position {pos}")


def _lookup(env: Mapping[str, Series], name: str) -> Series:
    try:
        return env[name]
    except KeyError:
        raise ParseError(f"undefined symbol {name!r}") from None


def _eval(node, order: int, env: Mapping[str, Series]) -> Series:
    tag = node[0]
    if tag == "num":
        return Series.constant(node[1], order)
    if tag == "x":
        return Series.x(order)
    if tag == "sym":
        return _lookup(env, node[1])
    if tag == "call":
        return _lookup(env, node[1]).compose(_eval(node[2], order, env))
    if tag == "sqrt":
        return _eval(node[1], order, env).sqrt()
    if tag == "neg":
        return -_eval(node[1], order, env)
    if tag == "pow":
        return _eval(node[1], order, env) ** node[2]
    a = _eval(node[1], order, env)
    b = _eval(node[2], order, env)
    if tag == "add":
        return a + b
    if tag == "sub":
        return a - b
    if tag == "mul":
        return a * b
    return a / b


@dataclass(frozen=True)
class Expression:
    """A parsed expression that can be evaluated at any working order."""

    text: str
    tree: tuple

    def evaluate(self, order: int, env: Mapping[str, Series] | None = None) -> Series:
        return _eval(self.tree, order, env or {})

    def symbols(self) -> set[str]:
        found = set()

        def walk(node):
            if node[0] in ("sym", "call"):
                found.add(node[1])
            for child in node[1:]:
                if isinstance(child, tuple):
                    walk(child)

        walk(self.tree)
        return found


def compile_expression(text: str) -> Expression:
    return Expression(text, _Parser(text).parse())


def ps_parse(text: str, order: int = DEFAULT_ORDER, symbols: Mapping[str, Series] | None = None) -> Series:
    """Evaluate ``text`` to a series known to exactly ``order`` coefficients.

    Divisions by powers of x shorten the result, so the expression is
    re-evaluated at a larger working order until enough terms survive.
    """
    expr = compile_expression(text)
    extra = 0
    while True:
        result = expr.evaluate(order + extra, symbols)
        if result.order >= order:
            return result.truncate(order)
        if extra > order + 16:
            raise OrderExceeded(f"{text!r} cannot be evaluated to order {order}")
        extra = max(2 * extra, order - result.order + extra)
