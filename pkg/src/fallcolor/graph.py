"""Simple undirected graphs, the families used by the gap constructions, and
the join / Cartesian product operations.

Vertex numbering is fixed so that witness colorings are reproducible:

* ``join`` places part ``i`` at offset ``n_0 + ... + n_{i-1}``;
* ``cartesian_product`` maps ``(u, v)`` to ``u * n(h) + v``;
* ``add_pendants`` appends leaves after the original vertices, grouped by
  anchor in increasing anchor order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or invalid construction parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    def renamed(self, name: str) -> Graph:
        return Graph(self.n, self.adj, name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), name)


class DegreeStats(NamedTuple):
    min_degree: int
    max_degree: int
    n: int
    m: int


def degree_stats(g: Graph) -> DegreeStats:
    if g.n < 1:
        raise GraphError("degree statistics need at least one vertex")
    return DegreeStats(g.min_degree, g.max_degree, g.n, g.m)


# --- families -------------------------------------------------------------


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    BIPARTITE_MINUS_MATCHING = "bipartite_minus_matching"
    T_TREE = "t_tree"
    PENDANT_PATH = "pendant_path"
    CATERPILLAR_G6 = "caterpillar_g6"


# family -> (parameter names, minimum value of each)
_FAMILY_PARAMS: dict[Family, tuple[tuple[str, int], ...]] = {
    Family.PATH: (("n", 1),),
    Family.CYCLE: (("n", 3),),
    Family.COMPLETE: (("n", 1),),
    Family.COMPLETE_BIPARTITE: (("a", 1), ("b", 1)),
    Family.BIPARTITE_MINUS_MATCHING: (("n", 1),),
    Family.T_TREE: (("k", 1),),
    Family.PENDANT_PATH: (("epsilon", 1),),
    Family.CATERPILLAR_G6: (("epsilon", 1),),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = _FAMILY_PARAMS[self.family]
        if len(self.params) != len(expected):
            names = ", ".join(p for p, _ in expected)
            raise GraphError(f"{self.family.value} takes ({names}), got {len(self.params)} values")
        for value, (pname, lowest) in zip(self.params, expected):
            if not isinstance(value, int) or value < lowest:
                raise GraphError(f"{self.family.value}: {pname} must be an integer >= {lowest}, got {value!r}")

    @classmethod
    def of(cls, family: Family | str, *params: int) -> FamilySpec:
        return cls(Family(family), tuple(params))


def path(n: int) -> Graph:
    return generate(FamilySpec(Family.PATH, (n,)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec(Family.CYCLE, (n,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec(Family.COMPLETE, (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return generate(FamilySpec(Family.COMPLETE_BIPARTITE, (a, b)))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [], name=f"E{n}")


def generate(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam is Family.PATH:
        (n,) = p
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")
    if fam is Family.CYCLE:
        (n,) = p
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")
    if fam is Family.COMPLETE:
        (n,) = p
        return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")
    if fam is Family.COMPLETE_BIPARTITE:
        a, b = p
        return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")
    if fam is Family.BIPARTITE_MINUS_MATCHING:
        (n,) = p
        # left i = i, right j = n + j; the removed 1-factor pairs left i with right i
        edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
        return from_edge_list(2 * n, edges, f"K{n},{n}-PM")
    if fam is Family.T_TREE:
        (k,) = p
        edges: list[tuple[int, int]] = []
        size = 1
        for _ in range(k - 1):
            edges.extend((v, size + v) for v in range(size))
            size *= 2
        return from_edge_list(size, edges, f"T({k})")
    if fam is Family.PENDANT_PATH:
        (eps,) = p
        spine = path(eps + 3)
        return add_pendants(spine, [eps + 2] * spine.n).renamed(f"G4(eps={eps})")
    if fam is Family.CATERPILLAR_G6:
        (eps,) = p
        spine = path(eps + 5)
        # spine vertex index i-1 holds v_i; v_i gets i-2 leaves for i >= 3
        counts = [max(i - 2, 0) for i in range(1, eps + 6)]
        return add_pendants(spine, counts).renamed(f"G6(eps={eps})")
    raise GraphError(f"unknown family {fam!r}")  # pragma: no cover


# --- constructions --------------------------------------------------------


def add_pendants(g: Graph, counts: Sequence[int]) -> Graph:
    if len(counts) != g.n:
        raise GraphError(f"need {g.n} pendant counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise GraphError("pendant counts must be nonnegative")
    edges = g.edges()
    nxt = g.n
    for anchor, c in enumerate(counts):
        for _ in range(c):
            edges.append((anchor, nxt))
            nxt += 1
    return from_edge_list(nxt, edges, f"{g.name}+pendants" if g.name else "")


def join(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise GraphError("join needs at least one part")
    if any(p.n < 1 for p in parts):
        raise GraphError("join parts must be nonempty")
    offsets = part_offsets([p.n for p in parts])
    total = offsets[-1] + parts[-1].n
    adj: list[set[int]] = []
    for i, part in enumerate(parts):
        base = offsets[i]
        outside = set(range(0, base)) | set(range(base + part.n, total))
        for v in range(part.n):
            adj.append({base + u for u in part.adj[v]} | outside)
    name = "join(" + ",".join(p.name or "?" for p in parts) + ")"
    return Graph(total, tuple(frozenset(a) for a in adj), name)


def part_offsets(sizes: Sequence[int]) -> list[int]:
    """Starting vertex id of each part inside a join."""
    offsets, acc = [], 0
    for s in sizes:
        offsets.append(acc)
        acc += s
    return offsets


def cartesian_product(g: Graph, h: Graph) -> Graph:
    if g.n < 1 or h.n < 1:
        raise GraphError("cartesian product needs nonempty factors")
    nh = h.n
    edges = []
    for u in range(g.n):
        for v1, v2 in h.edges():
            edges.append((u * nh + v1, u * nh + v2))
    for u1, u2 in g.edges():
        for v in range(nh):
            edges.append((u1 * nh + v, u2 * nh + v))
    return from_edge_list(g.n * nh, edges, f"{g.name or '?'}x{h.name or '?'}")


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    offsets = part_offsets([p.n for p in parts])
    edges = [(o + u, o + v) for o, p in zip(offsets, parts) for u, v in p.edges()]
    total = sum(p.n for p in parts)
    return from_edge_list(total, edges, "+".join(p.name or "?" for p in parts))
