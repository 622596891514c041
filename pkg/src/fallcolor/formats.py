"""DIMACS ``.col`` graphs and JSON coloring files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from .colorings import Coloring
from .graph import Graph, GraphError, from_edge_list


class DimacsError(GraphError):
    pass


def parse_dimacs(text: str, name: str = "") -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size") from None
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop on {u}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise DimacsError("missing problem line")
    g = from_edge_list(n, edges, name)
    # some generators list each edge twice; accept either convention
    if declared_m not in (g.m, len(edges)):
        raise DimacsError(f"header declares {declared_m} edges, found {g.m}")
    return g


def format_dimacs(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"c {g.name}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_dimacs(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    name = ""
    for line in text.splitlines():
        if line.startswith("c "):
            name = line[2:].strip()
            break
    return parse_dimacs(text, name or path.stem)


def write_dimacs(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_dimacs(g))


def read_coloring(path: str | Path) -> Coloring:
    with open(path) as fh:
        return load_coloring(fh)


def load_coloring(fh: TextIO) -> Coloring:
    try:
        data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"coloring file is not valid JSON: {exc}") from None
    return Coloring.from_json(data)


def write_coloring(c: Coloring, path: str | Path) -> None:
    Path(path).write_text(json.dumps(c.to_json()) + "\n")
