"""Expressions over named sets with union, intersection and complement.

Grammar (whitespace-insensitive)::

    expr   := term (("∪" | "|") term)*
    term   := factor (("∩" | "&") factor)*
    factor := atom ("ᶜ" | "^c")*
    atom   := NAME | "(" expr ")"

Intersection binds tighter than union; complement is a postfix and binds
tightest. Names may contain letters, digits, "_", "." and "-".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

Node = Union["Var", "Compl", "Join", "Meet"]


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Compl:
    child: Node

    def __str__(self) -> str:
        inner = str(self.child)
        if isinstance(self.child, (Join, Meet)):
            inner = f"({inner})"
        return f"{inner}ᶜ"


@dataclass(frozen=True)
class Join:
    left: Node
    right: Node

    def __str__(self) -> str:
        return f"{self.left} ∪ {self.right}"


@dataclass(frozen=True)
class Meet:
    left: Node
    right: Node

    def _wrap(self, node: Node) -> str:
        return f"({node})" if isinstance(node, Join) else str(node)

    def __str__(self) -> str:
        return f"{self._wrap(self.left)} ∩ {self._wrap(self.right)}"


_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.\-]*)|(?P<union>[∪|])|(?P<inter>[∩&])"
    r"|(?P<compl>ᶜ|\^c)|(?P<open>\()|(?P<close>\)))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ValueError(f"cannot parse expression at {rest[:12]!r}")
        pos = m.end()
        for kind in ("name", "union", "inter", "compl", "open", "close"):
            value = m.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else "end"

    def take(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.peek() == "union":
            self.take()
            node = Join(node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek() == "inter":
            self.take()
            node = Meet(node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        while self.peek() == "compl":
            self.take()
            node = Compl(node)
        return node

    def atom(self) -> Node:
        kind = self.peek()
        if kind == "name":
            return Var(self.take()[1])
        if kind == "open":
            self.take()
            node = self.expr()
            if self.peek() != "close":
                raise ValueError("missing closing parenthesis")
            self.take()
            return node
        raise ValueError(f"expected a set name or '(', found {kind}")


def parse_expression(text: str) -> Node:
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    parser = _Parser(tokens)
    node = parser.expr()
    if parser.pos != len(tokens):
        raise ValueError(f"trailing input after expression: {tokens[parser.pos:]}")
    return node


def evaluate(node: Node, resolve: Callable[[str], object], union, inter, compl):
    """Evaluate an expression tree with caller-supplied operations."""
    if isinstance(node, Var):
        return resolve(node.name)
    if isinstance(node, Compl):
        return compl(evaluate(node.child, resolve, union, inter, compl))
    if isinstance(node, Join):
        return union(
            evaluate(node.left, resolve, union, inter, compl),
            evaluate(node.right, resolve, union, inter, compl),
        )
    if isinstance(node, Meet):
        return inter(
            evaluate(node.left, resolve, union, inter, compl),
            evaluate(node.right, resolve, union, inter, compl),
        )
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_on_hfs(node: Node, resolve: Callable[[str], object]):
    """Evaluate over public HFS objects."""
    from .sets import HFS

    return evaluate(node, resolve, HFS.union, HFS.intersection, HFS.complement)


def variables(node: Node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Compl):
        return variables(node.child)
    return variables(node.left) | variables(node.right)
