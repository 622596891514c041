"""Colorings and their classification.

A :class:`Coloring` is any map from vertices to ``1..k``; nothing about it is
assumed proper. :func:`classify` decides, for one graph and one coloring,
which of the six coloring classes it belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ColoringError(f"k must be >= 1, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ColoringError(f"colors {sorted(set(bad))} outside 1..{self.k}")

    @classmethod
    def of(cls, k: int, colors: Sequence[int]) -> Coloring:
        return cls(k, tuple(colors))

    @classmethod
    def tight(cls, colors: Sequence[int]) -> Coloring:
        """Coloring whose k is the largest color used."""
        return cls(max(colors), tuple(colors))

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[frozenset[int]]:
        """Color classes V_1..V_k (some possibly empty)."""
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)

    def shifted(self, offset: int, k: int) -> Coloring:
        return Coloring(k, tuple(c + offset for c in self.colors))

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        try:
            return cls(int(data["k"]), tuple(int(c) for c in data["colors"]))
        except (KeyError, TypeError) as exc:
            raise ColoringError(f"bad coloring object: {exc}") from None


def _check_length(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ColoringError(f"coloring has {len(c.colors)} entries, graph has {g.n} vertices")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_length(g, c)
    col = c.colors
    return all(col[u] != col[v] for u in range(g.n) for v in g.adj[u] if u < v)


def colorful_vertices(g: Graph, c: Coloring) -> frozenset[int]:
    """Vertices whose closed neighborhood carries every color 1..k."""
    _check_length(g, c)
    col = c.colors
    out = set()
    for v in range(g.n):
        seen = {col[u] for u in g.adj[v]}
        seen.add(col[v])
        if len(seen) == c.k:
            out.add(v)
    return frozenset(out)


def grundy_vertices(g: Graph, c: Coloring) -> frozenset[int]:
    """Vertices whose open neighborhood carries every color below their own."""
    _check_length(g, c)
    col = c.colors
    out = set()
    for v in range(g.n):
        seen = {col[u] for u in g.adj[v]}
        if all(i in seen for i in range(1, col[v])):
            out.add(v)
    return frozenset(out)


def realized_pairs(g: Graph, c: Coloring) -> frozenset[tuple[int, int]]:
    """Unordered color pairs ``(a, b)``, ``a < b``, joined by at least one edge."""
    col = c.colors
    return frozenset(
        (min(col[u], col[v]), max(col[u], col[v])) for u, v in g.edges() if col[u] != col[v]
    )


@dataclass(frozen=True)
class ColoringClass:
    proper: bool
    fall: bool
    b_coloring: bool
    grundy: bool
    partial_grundy: bool
    complete: bool
    colorful_set: frozenset[int]
    grundy_set: frozenset[int]
    used_colors: frozenset[int]

    def has(self, kind: str) -> bool:
        return bool(getattr(self, kind))

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "fall": self.fall,
            "b_coloring": self.b_coloring,
            "grundy": self.grundy,
            "partial_grundy": self.partial_grundy,
            "complete": self.complete,
            "colorful_set": sorted(self.colorful_set),
            "grundy_set": sorted(self.grundy_set),
            "used_colors": sorted(self.used_colors),
        }


KINDS = ("proper", "fall", "b_coloring", "grundy", "partial_grundy", "complete")


class ClassificationInconsistent(AssertionError):
    """The classification flags contradict the known implications between classes."""


def classify(g: Graph, c: Coloring) -> ColoringClass:
    _check_length(g, c)
    k, col = c.k, c.colors
    proper = is_proper(g, c)
    colorful = colorful_vertices(g, c)
    grundy_set = grundy_vertices(g, c)
    used = c.used_colors()
    # every class except "proper" needs all k colors realized
    full = proper and len(used) == k

    fall = full and len(colorful) == g.n
    b_col = full and {col[v] for v in colorful} == used
    grundy = full and len(grundy_set) == g.n
    partial = full and {col[v] for v in grundy_set} == used
    complete = full and len(realized_pairs(g, c)) == k * (k - 1) // 2

    result = ColoringClass(proper, fall, b_col, grundy, partial, complete, colorful, grundy_set, used)
    _self_check(result)
    return result


def _self_check(r: ColoringClass) -> None:
    implications = [
        (r.fall, r.proper, "fall => proper"),
        (r.fall, r.b_coloring, "fall => b-coloring"),
        (r.fall, r.grundy, "fall => Grundy"),
        (r.grundy, r.partial_grundy, "Grundy => partial Grundy"),
        (r.b_coloring, r.partial_grundy, "b-coloring => partial Grundy"),
        (r.partial_grundy, r.complete, "partial Grundy => complete"),
    ]
    for premise, conclusion, label in implications:
        if premise and not conclusion:
            raise ClassificationInconsistent(label)
