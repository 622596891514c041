"""Exact values of the eight coloring parameters, each with a witness.

Minimum parameters (chi, the fall spectrum) search upward from a lower bound;
maximum parameters (phi, Gamma, partial Gamma, psi) search downward from an
upper bound and stop at the first feasible ``k``, or at a cheaply built
lower-bound witness, whichever comes first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .colorings import Coloring, classify
from .graph import Graph
from .search import UNLIMITED, Budget, Mode, SearchLimits, SearchTimeout, find_coloring, static_order


class Status(str, enum.Enum):
    EXACT = "EXACT"
    LOWER_BOUND_ONLY = "LOWER_BOUND_ONLY"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class Solution:
    """Result of one parameter computation.

    ``value`` is the exact parameter when ``status`` is EXACT; otherwise it is
    the best value certified by ``witness`` (an upper bound for chi, a lower
    bound for the maximum parameters) and ``lower``/``upper`` bracket the truth.
    ``bounds`` is the analytic bracket the search started from.
    """

    value: int
    witness: Coloring | None
    status: Status
    lower: int
    upper: int
    bounds: tuple[int, int] = (0, 0)

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


@dataclass(frozen=True)
class FallSpectrum:
    values: tuple[int, ...]
    witnesses: dict[int, Coloring] = field(compare=False)
    status: Status = Status.EXACT
    undecided: tuple[int, ...] = ()

    @property
    def chi_f(self) -> int | None:
        return self.values[0] if self.values else None

    @property
    def psi_f(self) -> int | None:
        return self.values[-1] if self.values else None


# --- bounds ----------------------------------------------------------------


def clique_number(g: Graph) -> int:
    best = 0 if g.n == 0 else 1

    def expand(size: int, cands: set[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(cands) <= best:
            return
        for v in sorted(cands):
            if size + len(cands) <= best:
                return
            expand(size + 1, cands & g.adj[v])
            cands = cands - {v}

    expand(0, set(range(g.n)))
    return best


def m_degree(g: Graph) -> int:
    """Largest ``i`` such that at least ``i`` vertices have degree ``>= i - 1``."""
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    best = 0
    for i in range(1, g.n + 1):
        if degrees[i - 1] >= i - 1:
            best = i
    return best


def achromatic_edge_bound(g: Graph) -> int:
    """Largest ``k <= n`` with ``k(k-1)/2 <= m``: each color pair needs its own edge."""
    k = 1
    while k + 1 <= g.n and (k + 1) * k // 2 <= g.m:
        k += 1
    return k


# --- cheap witnesses ---------------------------------------------------------


def first_fit(g: Graph, order: Iterable[int]) -> Coloring:
    """Greedy coloring in the given order; the result is always a Grundy coloring."""
    colors = [0] * g.n
    for v in order:
        taken = {colors[u] for u in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring.tight(colors)


def dsatur(g: Graph) -> Coloring:
    colors = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not colors[u]),
            key=lambda u: (len({colors[w] for w in g.adj[u]} - {0}), g.degree(u), -u),
        )
        taken = {colors[u] for u in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring.tight(colors)


def reduce_to_b_coloring(g: Graph, c: Coloring) -> Coloring:
    """Turn a proper coloring into a b-coloring by dissolving classes without a colorful vertex.

    Each vertex of a dissolved class moves to the smallest color it does not
    see; the class is independent so these moves cannot conflict.
    """
    colors = list(c.colors)
    k = c.k
    while True:
        seen = [{colors[u] for u in g.adj[v]} | {colors[v]} for v in range(g.n)]
        dominated = {colors[v] for v in range(g.n) if len(seen[v]) == k}
        bad = next((i for i in range(1, k + 1) if i not in dominated), None)
        if bad is None:
            return Coloring(k, tuple(colors))
        for v in range(g.n):
            if colors[v] == bad:
                colors[v] = min(i for i in range(1, k + 1) if i not in seen[v])
        colors = [x - 1 if x > bad else x for x in colors]
        k -= 1


def _grundy_lower_witness(g: Graph) -> Coloring:
    orders = [static_order(g), list(range(g.n)), list(reversed(static_order(g)))]
    return max((first_fit(g, o) for o in orders), key=lambda c: c.k)


# --- solvers -----------------------------------------------------------------


def chromatic_number(g: Graph, limits: SearchLimits = UNLIMITED) -> Solution:
    _require_vertices(g)
    budget = Budget(limits)
    best = dsatur(g)
    k = clique_number(g)
    bounds = (k, best.k)
    try:
        while k < best.k:
            found = find_coloring(g, k, Mode.PROPER, budget)
            if found is not None:
                best = found
                break
            k += 1
    except SearchTimeout:
        return Solution(best.k, best, Status.TIMEOUT, k, best.k, bounds)
    return Solution(best.k, best, Status.EXACT, best.k, best.k, bounds)


def find_fall_coloring(g: Graph, k: int, limits: SearchLimits = UNLIMITED) -> Coloring | None:
    """A fall ``k``-coloring of ``g``, or ``None`` if none exists.

    Raises :class:`SearchTimeout` when the budget runs out first.
    """
    return _find_fall(g, k, Budget(limits))


def _find_fall(g: Graph, k: int, budget: Budget, clique: int | None = None) -> Coloring | None:
    _require_vertices(g)
    if k < 1:
        raise ValueError("k must be >= 1")
    # every closed neighborhood must carry k distinct colors
    if k > g.min_degree + 1:
        return None
    if k < (clique_number(g) if clique is None else clique):
        return None
    return find_coloring(g, k, Mode.FALL, budget)


def fall_spectrum(g: Graph, limits: SearchLimits = UNLIMITED) -> FallSpectrum:
    _require_vertices(g)
    budget = Budget(limits)
    clique = clique_number(g)
    values, witnesses = [], {}
    ks = list(range(1, g.min_degree + 2))
    for i, k in enumerate(ks):
        try:
            found = _find_fall(g, k, budget, clique)
        except SearchTimeout:
            return FallSpectrum(tuple(values), witnesses, Status.TIMEOUT, tuple(ks[i:]))
        if found is not None:
            values.append(k)
            witnesses[k] = found
    return FallSpectrum(tuple(values), witnesses)


def _maximize(g: Graph, mode: Mode, upper: int, fallback: Coloring, limits: SearchLimits) -> Solution:
    budget = Budget(limits)
    lower = fallback.k
    bounds = (lower, upper)
    k = upper
    try:
        while k > lower:
            found = find_coloring(g, k, mode, budget)
            if found is not None:
                return Solution(k, found, Status.EXACT, k, k, bounds)
            k -= 1
    except SearchTimeout:
        return Solution(lower, fallback, Status.LOWER_BOUND_ONLY, lower, k, bounds)
    return Solution(lower, fallback, Status.EXACT, lower, lower, bounds)


def b_chromatic_number(g: Graph, limits: SearchLimits = UNLIMITED) -> Solution:
    _require_vertices(g)
    fallback = reduce_to_b_coloring(g, dsatur(g))
    return _maximize(g, Mode.B, m_degree(g), fallback, limits)


def grundy_number(g: Graph, limits: SearchLimits = UNLIMITED) -> Solution:
    """Largest k with a Grundy k-coloring.

    Colors are built class by class: in a Grundy coloring the class of color 1
    is a maximal independent set and the rest is a Grundy coloring of what
    remains, so ``Gamma(S) = 1 + max Gamma(S - I)`` over maximal independent
    ``I`` of ``G[S]``, memoized on ``S``.
    """
    _require_vertices(g)
    fallback = _grundy_lower_witness(g)
    upper = g.max_degree + 1
    bounds = (fallback.k, upper)
    if fallback.k == upper:
        return Solution(upper, fallback, Status.EXACT, upper, upper, bounds)
    budget = Budget(limits)
    adj = _adj_masks(g)
    memo: dict[int, tuple[int, int]] = {0: (0, 0)}

    def best(S: int) -> int:
        hit = memo.get(S)
        if hit is not None:
            return hit[0]
        budget.tick()
        top, choice = 0, 0
        cap = _degree_cap(S, S, adj)
        for I in _maximal_independent_sets(S, adj):
            rest = S & ~I
            if rest and 1 + _degree_cap(rest, rest, adj) <= top:
                continue
            val = 1 + best(rest)
            if val > top:
                top, choice = val, I
                if top == cap:
                    break
        memo[S] = (top, choice)
        return top

    full = (1 << g.n) - 1
    try:
        value = best(full)
    except SearchTimeout:
        return Solution(fallback.k, fallback, Status.LOWER_BOUND_ONLY, fallback.k, upper, bounds)
    colors = [0] * g.n
    S, c = full, 0
    while S:
        c += 1
        I = memo[S][1]
        for v in _bits(I):
            colors[v] = c
        S &= ~I
    return Solution(value, Coloring(value, tuple(colors)), Status.EXACT, value, value, bounds)


def partial_grundy_number(g: Graph, limits: SearchLimits = UNLIMITED) -> Solution:
    """Largest k with a partial Grundy k-coloring.

    Classes are built from color 1 upward. A later class needs a vertex with a
    neighbor in every earlier class, so the state is the set ``S`` of
    uncolored vertices together with the subset ``D`` of them adjacent to all
    classes so far. Uncolored leftovers are colored first-fit at the end; that
    keeps every designated Grundy vertex and any new class it opens is Grundy.
    """
    _require_vertices(g)
    fallback = _grundy_lower_witness(g)
    upper = g.max_degree + 1
    bounds = (fallback.k, upper)
    if fallback.k == upper:
        return Solution(upper, fallback, Status.EXACT, upper, upper, bounds)
    budget = Budget(limits)
    twins = _false_twin_rank(g)
    # cheap top-down attempts first; each exhausted k is a proof that k fails
    try:
        for k in range(upper, fallback.k, -1):
            found = _stair_search(g, k, budget, twins, STAIR_NODE_CAP)
            if found is not None:
                return Solution(found.k, found, Status.EXACT, found.k, found.k, bounds)
            upper = k - 1
    except _StairCap:
        pass
    except SearchTimeout:
        return Solution(fallback.k, fallback, Status.LOWER_BOUND_ONLY, fallback.k, upper, bounds)
    if fallback.k == upper:
        return Solution(upper, fallback, Status.EXACT, upper, upper, bounds)
    adj = _adj_masks(g)
    memo: dict[tuple[int, int], tuple[int, int]] = {}

    def best(S: int, D: int) -> int:
        key = (S, D)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        budget.tick()
        top, choice = 0, 0
        cap = _degree_cap(S, D, adj)
        if D:
            # a vertex outside D with no neighbor in D only shrinks what is left
            useful = D
            for v in _bits(D):
                useful |= adj[v] & S
            for I in _independent_subsets(useful, adj):
                if not I & D or not _twin_prefix(I, S, twins):
                    continue
                reach = 0
                for v in _bits(I):
                    reach |= adj[v]
                rest = S & ~I
                D2 = D & rest & reach
                if 1 + _degree_cap(rest, D2, adj) <= top:
                    continue
                val = 1 + best(rest, D2)
                if val > top:
                    top, choice = val, I
                    if top == cap:
                        break
        memo[key] = (top, choice)
        return top

    full = (1 << g.n) - 1
    try:
        value = best(full, full)
    except SearchTimeout:
        return Solution(fallback.k, fallback, Status.LOWER_BOUND_ONLY, fallback.k, upper, bounds)
    colors = [0] * g.n
    S, D, c = full, full, 0
    while memo.get((S, D), (0, 0))[0]:
        c += 1
        I = memo[(S, D)][1]
        reach = 0
        for v in _bits(I):
            colors[v] = c
            reach |= adj[v]
        S &= ~I
        D &= S & reach
    for v in _bits(S):
        taken = {colors[u] for u in g.adj[v]}
        colors[v] = min(x for x in range(1, value + 2) if x not in taken)
    return Solution(value, Coloring(value, tuple(colors)), Status.EXACT, value, value, bounds)


# node allowance for each top-down partial Grundy attempt before falling back
STAIR_NODE_CAP = 20_000


class _StairCap(Exception):
    pass


def _stair_search(
    g: Graph, k: int, budget: Budget, twins: list[tuple[int, ...]], cap: int
) -> Coloring | None:
    """A partial Grundy coloring with at least ``k`` colors, or None if there is none.

    Works from color ``k`` down: pick a vertex to be the Grundy vertex of
    color j (already colored j, or uncolored and free of j), then color
    uncolored neighbors with whichever lower colors it still misses. Every
    other vertex is colored first-fit at the end. Uncolored false twins are
    interchangeable, so they are always used lowest id first.
    """
    colors = [0] * g.n
    start = budget.nodes

    def allowed(v: int, c: int) -> bool:
        return all(colors[u] != c for u in g.adj[v])

    def canonical(v: int) -> bool:
        return all(colors[u] for u in twins[v])

    def place(j: int) -> bool:
        if j == 0:
            return True
        budget.tick()
        if budget.nodes - start > cap:
            raise _StairCap
        for x in range(g.n):
            if colors[x] == j:
                pass
            elif colors[x] or not allowed(x, j) or not canonical(x):
                continue
            seen = {colors[u] for u in g.adj[x]}
            missing = [i for i in range(1, j) if i not in seen]
            free = [u for u in sorted(g.adj[x]) if not colors[u]]
            if len(free) < len(missing):
                continue
            fresh = not colors[x]
            colors[x] = j
            if supply(missing, 0, free, j):
                return True
            if fresh:
                colors[x] = 0
        return False

    def supply(missing: list[int], i: int, free: list[int], j: int) -> bool:
        if i == len(missing):
            return place(j - 1)
        c = missing[i]
        for u in free:
            if colors[u] or not allowed(u, c) or not canonical(u):
                continue
            colors[u] = c
            if supply(missing, i + 1, free, j):
                return True
            colors[u] = 0
        return False

    if not place(k):
        return None
    for v in range(g.n):
        if not colors[v]:
            taken = {colors[u] for u in g.adj[v]}
            colors[v] = next(c for c in range(1, g.n + 1) if c not in taken)
    return Coloring(max(colors), tuple(colors))


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _degree_cap(S: int, D: int, adj: list[int]) -> int:
    """Upper bound on the classes still to come: the last one needs a vertex
    of ``D`` adjacent to all the others inside ``S``."""
    if not D:
        return 0
    return min(_popcount(S), 1 + max(_popcount(adj[v] & S) for v in _bits(D)))


def _maximal_independent_sets(S: int, adj: list[int]) -> list[int]:
    """Maximal independent sets of ``G[S]``: Bron-Kerbosch with pivoting on the complement."""
    out: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        # branch only on P within the closed neighborhood of a pivot
        pivot = min(_bits(P | X), key=lambda u: _popcount(P & (adj[u] | 1 << u)))
        for v in _bits(P & (adj[pivot] | 1 << pivot)):
            closed = adj[v] | 1 << v
            expand(R | 1 << v, P & ~closed, X & ~closed)
            P &= ~(1 << v)
            X |= 1 << v

    expand(0, S, 0)
    return out


def _false_twin_rank(g: Graph) -> list[tuple[int, ...]]:
    """For each vertex, the lower-numbered vertices with the same open neighborhood."""
    groups: dict[frozenset[int], list[int]] = {}
    earlier: list[tuple[int, ...]] = []
    for v in range(g.n):
        members = groups.setdefault(g.adj[v], [])
        earlier.append(tuple(members))
        members.append(v)
    return earlier


def _twin_prefix(I: int, S: int, twins: list[tuple[int, ...]]) -> bool:
    """Interchangeable twins are taken lowest id first."""
    for v in _bits(I):
        for u in twins[v]:
            if S >> u & 1 and not I >> u & 1:
                return False
    return True


def _dominates(I: int, rest: int, adj: list[int]) -> bool:
    """Every vertex of ``rest`` has a neighbor in ``I``."""
    return all(adj[v] & I for v in _bits(rest))


def _independent_subsets(S: int, adj: list[int]) -> list[int]:
    """Nonempty independent subsets of ``S``, larger-first within each branch."""
    out: list[int] = []

    def grow(chosen: int, cands: int) -> None:
        if not cands:
            if chosen:
                out.append(chosen)
            return
        low = cands & -cands
        v = low.bit_length() - 1
        grow(chosen | low, cands & ~low & ~adj[v])
        grow(chosen, cands & ~low)

    grow(0, S)
    return out


def achromatic_number(g: Graph, limits: SearchLimits = UNLIMITED) -> Solution:
    _require_vertices(g)
    # a Grundy coloring is complete: each class has a vertex seeing every lower class
    return _maximize(g, Mode.COMPLETE, achromatic_edge_bound(g), _grundy_lower_witness(g), limits)


def tree_grundy_number(g: Graph) -> int:
    """Grundy number of a forest by dynamic programming over rooted subtrees.

    A vertex can take color ``c`` inside a subtree iff it has ``c - 1``
    distinct children that can take colors ``1..c-1``; the set of colors a
    vertex can take is always an initial segment, so each directed edge only
    needs its maximum.
    """
    _require_vertices(g)
    if g.m != g.n - _component_count(g):
        raise ValueError("tree_grundy_number needs an acyclic graph")
    memo: dict[tuple[int, int], int] = {}

    def best(v: int, parent: int) -> int:
        key = (v, parent)
        if key not in memo:
            child_best = sorted(best(u, v) for u in g.adj[v] if u != parent)
            c = 1
            for b in child_best:
                if b >= c:
                    c += 1
            memo[key] = c
        return memo[key]

    return max(best(v, -1) for v in range(g.n))


def _component_count(g: Graph) -> int:
    seen, count = set(), 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return count


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")


def check_witness(g: Graph, witness: Coloring, kind: str) -> bool:
    return classify(g, witness).has(kind)
