"""Tiny expression language for building graphs on the command line.

    expr  := atom | "join" "(" expr ("," expr)* ")" | "prod" "(" expr "," expr ")"
    atom  := name "(" int ("," int)* ")"

Atoms: ``path(n)``, ``cycle(n)``, ``complete(n)``, ``kbip(a,b)``,
``kbip_mm(n)``, ``ttree(k)``, ``pendant_path(e)``, ``caterpillar(e)``.
"""

from __future__ import annotations

import re

from .graph import Family, FamilySpec, Graph, GraphError, cartesian_product, generate, join

ATOMS = {
    "path": Family.PATH,
    "cycle": Family.CYCLE,
    "complete": Family.COMPLETE,
    "kbip": Family.COMPLETE_BIPARTITE,
    "kbip_mm": Family.BIPARTITE_MINUS_MATCHING,
    "ttree": Family.T_TREE,
    "pendant_path": Family.PENDANT_PATH,
    "caterpillar": Family.CATERPILLAR_G6,
}

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<punct>[(),]))")


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExpressionError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Graph:
        _, name, pos = self.take("name")
        self.take("punct", "(")
        if name == "join":
            parts = [self.expr()]
            while self.peek()[1] == ",":
                self.take("punct", ",")
                parts.append(self.expr())
            self.take("punct", ")")
            return join(parts)
        if name == "prod":
            left = self.expr()
            self.take("punct", ",")
            right = self.expr()
            self.take("punct", ")")
            return cartesian_product(left, right)
        if name not in ATOMS:
            raise ExpressionError(f"unknown graph {name!r}", pos)
        args = [int(self.take("int")[1])]
        while self.peek()[1] == ",":
            self.take("punct", ",")
            args.append(int(self.take("int")[1]))
        self.take("punct", ")")
        try:
            return generate(FamilySpec(ATOMS[name], tuple(args)))
        except GraphError as exc:
            raise ExpressionError(str(exc), pos) from None


def parse_expression(text: str) -> Graph:
    parser = _Parser(text)
    g = parser.expr()
    parser.take("end")
    return g.renamed(text.replace(" ", ""))
