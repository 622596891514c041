"""Backtracking search for a coloring with exactly ``k`` colors in a given class.

Vertices are assigned in a static order (descending degree, ties by id) and
colors are tried lowest first. For the classes that are closed under color
permutation (proper, fall, b, complete) a new color ``c + 1`` may only be
introduced once ``c`` is in use. Grundy-type classes order their colors, so
they search the full assignment space.

Every mode keeps the same incremental bookkeeping per vertex:

* ``nb[v][c]``   number of colored neighbors of ``v`` that carry color ``c``
* ``distinct[v]`` number of colors present on colored neighbors of ``v``
* ``free[v]``    number of uncolored neighbors of ``v``

and prunes a branch as soon as some requirement can no longer be met with
the vertices that are still uncolored.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .colorings import Coloring, classify
from .graph import Graph


class Mode(enum.Enum):
    PROPER = "proper"
    FALL = "fall"
    B = "b_coloring"
    GRUNDY = "grundy"
    PARTIAL_GRUNDY = "partial_grundy"
    COMPLETE = "complete"


SYMMETRIC_MODES = frozenset({Mode.PROPER, Mode.FALL, Mode.B, Mode.COMPLETE})


@dataclass(frozen=True)
class SearchLimits:
    """Budget for one solver call; 0 means unlimited."""

    node_budget: int = 0
    time_budget: float = 0.0

    def __post_init__(self) -> None:
        if self.node_budget < 0 or self.time_budget < 0:
            raise ValueError("search limits must be nonnegative")


UNLIMITED = SearchLimits()


class SearchTimeout(Exception):
    """The node or time budget ran out before the search finished."""


class Budget:
    def __init__(self, limits: SearchLimits = UNLIMITED):
        self.limits = limits
        self.nodes = 0
        self._deadline = time.monotonic() + limits.time_budget if limits.time_budget else None

    def tick(self) -> None:
        self.nodes += 1
        if self.limits.node_budget and self.nodes > self.limits.node_budget:
            raise SearchTimeout(f"node budget {self.limits.node_budget} exhausted")
        if self._deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self._deadline:
            raise SearchTimeout(f"time budget {self.limits.time_budget}s exhausted")


def static_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class KSearch:
    """One exact search for a ``k``-coloring of ``g`` in the class ``mode``."""

    def __init__(self, g: Graph, k: int, mode: Mode, budget: Budget | None = None):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.g = g
        self.k = k
        self.mode = mode
        self.budget = budget or Budget()
        n = g.n
        self.n = n
        self.adj = [sorted(g.adj[v]) for v in range(n)]
        self.deg = [len(a) for a in self.adj]
        self.order = static_order(g)
        self.color = [0] * n
        self.nb = [[0] * (k + 1) for _ in range(n)]
        self.distinct = [0] * n
        self.free = list(self.deg)
        self.size = [0] * (k + 1)
        self.used = 0
        self.remaining = n
        self.maxc = 0
        self.symmetric = mode in SYMMETRIC_MODES
        if mode is Mode.FALL:
            self.ball2 = [self._ball2(v) for v in range(n)]
        if mode is Mode.COMPLETE:
            self.edge_list = g.edges()
            self.pair = [[0] * (k + 1) for _ in range(k + 1)]
            self.realized = 0

    def _ball2(self, v: int) -> list[int]:
        near = {v}
        for u in self.adj[v]:
            near.add(u)
            near.update(self.adj[u])
        return sorted(near)

    # --- incremental state ------------------------------------------------

    def _assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.size[c] += 1
        if self.size[c] == 1:
            self.used += 1
        self.remaining -= 1
        nb, distinct, free = self.nb, self.distinct, self.free
        for u in self.adj[v]:
            row = nb[u]
            if row[c] == 0:
                distinct[u] += 1
            row[c] += 1
            free[u] -= 1
        if self.mode is Mode.COMPLETE:
            color, pair = self.color, self.pair
            for u in self.adj[v]:
                cu = color[u]
                if cu:
                    if pair[c][cu] == 0:
                        self.realized += 1
                    pair[c][cu] += 1
                    pair[cu][c] += 1

    def _unassign(self, v: int) -> None:
        c = self.color[v]
        if self.mode is Mode.COMPLETE:
            color, pair = self.color, self.pair
            for u in self.adj[v]:
                cu = color[u]
                if cu:
                    pair[c][cu] -= 1
                    pair[cu][c] -= 1
                    if pair[c][cu] == 0:
                        self.realized -= 1
        self.color[v] = 0
        self.size[c] -= 1
        if self.size[c] == 0:
            self.used -= 1
        self.remaining += 1
        nb, distinct, free = self.nb, self.distinct, self.free
        for u in self.adj[v]:
            row = nb[u]
            row[c] -= 1
            if row[c] == 0:
                distinct[u] -= 1
            free[u] += 1

    # --- pruning ------------------------------------------------------------

    def _missing_below(self, v: int, c: int) -> int:
        row = self.nb[v]
        return sum(1 for d in range(1, c) if row[d] == 0)

    def _feasible(self, v: int) -> bool:
        k = self.k
        if self.remaining < k - self.used:
            return False
        color, distinct = self.color, self.distinct
        for u in self.adj[v]:
            if not color[u] and distinct[u] >= k:
                return False
        mode = self.mode
        if mode is Mode.FALL:
            return self._fall_ok(v)
        if mode is Mode.B:
            return self._b_ok()
        if mode is Mode.GRUNDY:
            return self._grundy_ok(v)
        if mode is Mode.PARTIAL_GRUNDY:
            return self._partial_grundy_ok()
        if mode is Mode.COMPLETE:
            return self._complete_ok()
        return True

    def _fall_ok(self, v: int) -> bool:
        k, color, nb, free, distinct, adj = self.k, self.color, self.nb, self.free, self.distinct, self.adj
        for w in self.ball2[v]:
            cw = color[w]
            present = distinct[w] + (1 if cw else 0)
            slots = free[w] + (0 if cw else 1)
            if k - present > slots:
                return False
            if present == k:
                continue
            # every missing color must still fit on some uncolored vertex of N[w]
            row = nb[w]
            for d in range(1, k + 1):
                if row[d] or cw == d or not cw:
                    continue  # present, or w itself is still free to take d
                for u in adj[w]:
                    if not color[u] and nb[u][d] == 0:
                        break
                else:
                    return False
        return True

    def _b_ok(self) -> bool:
        k, color, nb, free, distinct, deg = self.k, self.color, self.nb, self.free, self.distinct, self.deg
        need = k - 1
        fixed = [False] * (k + 1)
        open_cands = []
        for w in range(self.n):
            if deg[w] < need or need - distinct[w] > free[w]:
                continue
            cw = color[w]
            if cw:
                fixed[cw] = True
            else:
                open_cands.append(nb[w])
        for c in range(1, k + 1):
            if fixed[c]:
                continue
            if not any(row[c] == 0 for row in open_cands):
                return False
        return True

    def _grundy_ok(self, v: int) -> bool:
        color, free, deg = self.color, self.free, self.deg
        for w in (v, *self.adj[v]):
            cw = color[w]
            if cw:
                if self._missing_below(w, cw) > free[w]:
                    return False
            else:
                # w must still accept some color whose lower colors remain reachable
                row = self.nb[w]
                for c in range(1, min(self.k, deg[w] + 1) + 1):
                    if row[c] == 0 and self._missing_below(w, c) <= free[w]:
                        break
                else:
                    return False
        size = self.size
        for c in range(1, self.k + 1):
            if size[c] == 0 and not self._could_host(c, require_grundy=True):
                return False
        return True

    def _could_host(self, c: int, require_grundy: bool) -> bool:
        color, nb, free, deg = self.color, self.nb, self.free, self.deg
        for w in range(self.n):
            cw = color[w]
            if cw == c or (not cw and nb[w][c] == 0 and deg[w] >= c - 1):
                if not require_grundy or self._missing_below(w, c) <= free[w]:
                    return True
        return False

    def _partial_grundy_ok(self) -> bool:
        for c in range(1, self.k + 1):
            if not self._could_host(c, require_grundy=True):
                return False
        return True

    def _complete_ok(self) -> bool:
        k = self.k
        missing_pairs = k * (k - 1) // 2 - self.realized
        if missing_pairs == 0:
            return True
        color, nb = self.color, self.nb
        full = (1 << (k + 1)) - 2
        masks = []
        for w in range(self.n):
            cw = color[w]
            if cw:
                masks.append(1 << cw)
            else:
                row = nb[w]
                masks.append(sum(1 << c for c in range(1, k + 1) if row[c] == 0) if self.distinct[w] else full)
        reach = [0] * (k + 1)
        open_edges = 0
        for u, w in self.edge_list:
            if color[u] and color[w]:
                continue
            open_edges += 1
            mu, mw = masks[u], masks[w]
            for a in range(1, k + 1):
                if mu >> a & 1:
                    reach[a] |= mw
                if mw >> a & 1:
                    reach[a] |= mu
        if open_edges < missing_pairs:
            return False
        pair = self.pair
        for a in range(1, k + 1):
            ra, pa = reach[a], pair[a]
            for b in range(a + 1, k + 1):
                if pa[b] == 0 and not ra >> b & 1:
                    return False
        return True

    # --- driver -------------------------------------------------------------

    def _candidates(self, v: int) -> range:
        top = self.k
        if self.symmetric:
            top = min(top, self.maxc + 1)
        elif self.mode is Mode.GRUNDY:
            top = min(top, self.deg[v] + 1)
        return range(1, top + 1)

    def run(self) -> Coloring | None:
        if self.n == 0:
            return None
        if self._dfs(0):
            return Coloring(self.k, tuple(self.color))
        return None

    def _dfs(self, depth: int) -> bool:
        if depth == self.n:
            return self._accept()
        self.budget.tick()
        v = self.order[depth]
        row = self.nb[v]
        for c in self._candidates(v):
            if row[c]:
                continue
            prev_max = self.maxc
            if c > self.maxc:
                self.maxc = c
            self._assign(v, c)
            if self._feasible(v) and self._dfs(depth + 1):
                return True
            self._unassign(v)
            self.maxc = prev_max
        return False

    def _accept(self) -> bool:
        if self.used != self.k:
            return False
        verdict = classify(self.g, Coloring(self.k, tuple(self.color)))
        return verdict.has(self.mode.value)


def find_coloring(g: Graph, k: int, mode: Mode, budget: Budget | None = None) -> Coloring | None:
    """Exact search; returns a witness or ``None`` when no such ``k``-coloring exists."""
    return KSearch(g, k, mode, budget).run()
