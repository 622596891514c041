"""One-shot reproduction of every checkable claim, as a JSON-ready report.

Sections: reference values, nonexistence, join composition/restriction,
join additivity and the gap construction. Every row carries a status;
``passed`` is false only for genuine failures, never for rows that ran out
of time, and never for the known Step-8 vertex-reading refutation.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from . import solvers
from .colorings import Coloring, classify
from .graph import Graph, cartesian_product, complete, cycle, disjoint_union, empty_graph, join, path
from .report import PARAMETERS
from .search import SearchLimits, SearchTimeout
from .theorems import (
    NotAFallColoring,
    all_fall_colorings,
    compose_join_fall,
    restrict_fall,
    theorem3_verify,
    verify_join_additivity,
)

COMPOSE_PARTS = ("K2", "P3", "P4", "C4", "C6", "K3", "K4")
ADDITIVITY_PARTS = ("K1", "K2", "P3", "P4", "C4", "C6", "K3")
FALL_PARAMETERS = ("fall_spectrum", "chi_f", "psi_f")

# the gap steps whose refutation is documented and expected
EXPECTED_REFUTATIONS = {(8, "vertices")}


def small_graph(name: str) -> Graph:
    kind, size = name[0], int(name[1:])
    builder = {"K": complete, "P": path, "C": cycle}[kind]
    return builder(size)


class Deadline:
    """A shared wall-clock budget handed out to consecutive solver calls."""

    def __init__(self, seconds: float):
        self.seconds = seconds
        self.start = time.monotonic()

    def limits(self) -> SearchLimits | None:
        """Limits for the next call, or None once the budget is spent."""
        if self.seconds <= 0:
            return SearchLimits()
        left = self.seconds - (time.monotonic() - self.start)
        return SearchLimits(time_budget=left) if left > 0 else None


@dataclass
class VerificationReport:
    sections: dict

    @property
    def passed(self) -> bool:
        return not any(
            row["status"] == "FAIL" for rows in self.sections.values() for row in _rows(rows)
        )

    @property
    def timed_out(self) -> bool:
        return any(row["status"] == "TIMEOUT" for rows in self.sections.values() for row in _rows(rows))

    def to_json(self) -> dict:
        return {**self.sections, "passed": self.passed}


def _rows(section):
    return section if isinstance(section, list) else section.get("rows", [])


# --- reference values and nonexistence ------------------------------------------


def reference_values(deadline: Deadline) -> list[dict]:
    expected = [("C4xC5", cycle(4), cycle(5), 3, 4), ("C5xC5", cycle(5), cycle(5), 3, 5)]
    rows = []
    for name, a, b, chi, chi_f in expected:
        g = cartesian_product(a, b)
        for param, want in (("chi", chi), ("chi_f", chi_f)):
            limits = deadline.limits()
            if limits is None:
                rows.append(_row(name, param, want, None, "TIMEOUT"))
                continue
            if param == "chi":
                sol = solvers.chromatic_number(g, limits)
                got, exact = sol.value, sol.exact
            else:
                spec = solvers.fall_spectrum(g, limits)
                got = spec.chi_f
                exact = spec.status is solvers.Status.EXACT or (
                    got is not None and all(k > got for k in spec.undecided)
                )
            status = "TIMEOUT" if not exact else ("PASS" if got == want else "FAIL")
            rows.append(_row(name, param, want, got, status))
    return rows


def nonexistence(deadline: Deadline) -> list[dict]:
    rows = []
    for name, g in (("C5", cycle(5)), ("K2+K1", disjoint_union([complete(2), empty_graph(1)]))):
        limits = deadline.limits()
        if limits is None:
            rows.append(_row(name, "fall_spectrum", [], None, "TIMEOUT"))
            continue
        spec = solvers.fall_spectrum(g, limits)
        if spec.status is not solvers.Status.EXACT:
            status = "TIMEOUT" if not spec.values else "FAIL"
        else:
            status = "PASS" if not spec.values else "FAIL"
        rows.append(_row(name, "fall_spectrum", [], list(spec.values), status))
    return rows


def _row(graph, parameter, expected, computed, status) -> dict:
    return {"graph": graph, "parameter": parameter, "expected": expected, "computed": computed, "status": status}


# --- join composition and restriction ---------------------------------------


def _random_relabel(c: Coloring, rng: random.Random) -> Coloring:
    perm = list(range(1, c.k + 1))
    rng.shuffle(perm)
    return Coloring(c.k, tuple(perm[x - 1] for x in c.colors))


def composition(seed: int, tuples: int) -> dict:
    rng = random.Random(seed)
    catalog = {name: (small_graph(name), all_fall_colorings(small_graph(name))) for name in COMPOSE_PARTS}
    failures = []
    for t in range(tuples):
        names = [rng.choice(COMPOSE_PARTS) for _ in range(rng.randint(2, 3))]
        parts = []
        for name in names:
            g, colorings = catalog[name]
            parts.append((g, _random_relabel(rng.choice(colorings), rng)))
        try:
            joint = compose_join_fall(parts)
            ok = classify(join([g for g, _ in parts]), joint).fall
        except NotAFallColoring:
            ok = False
        if not ok:
            failures.append({"tuple": t, "parts": names})
    return {"seed": seed, "tuples": tuples, "failures": failures, "status": "FAIL" if failures else "PASS"}


def _all_labelings(canonical: Coloring):
    for perm in itertools.permutations(range(1, canonical.k + 1)):
        yield Coloring(canonical.k, tuple(perm[x - 1] for x in canonical.colors))


def restriction(max_vertices: int = 10) -> dict:
    """Restrict every fall coloring (all color labelings) of every small two-part join."""
    joins = colorings = 0
    failures = []
    for a, b in itertools.combinations_with_replacement(COMPOSE_PARTS, 2):
        parts = [small_graph(a), small_graph(b)]
        if sum(p.n for p in parts) > max_vertices:
            continue
        joins += 1
        for canonical in all_fall_colorings(join(parts)):
            for c in _all_labelings(canonical):
                colorings += 1
                try:
                    pieces = restrict_fall(parts, c)
                    ok = all(classify(p, piece).fall for p, piece in zip(parts, pieces))
                except NotAFallColoring:
                    ok = False
                if not ok:
                    failures.append({"parts": [a, b], "colors": list(c.colors)})
    return {
        "joins": joins,
        "colorings": colorings,
        "failures": failures,
        "status": "FAIL" if failures else "PASS",
    }


# --- join additivity ---------------------------------------------------------


def additivity(deadline: Deadline) -> list[dict]:
    graphs = {name: small_graph(name) for name in ADDITIVITY_PARTS}
    has_fall = {name: bool(solvers.fall_spectrum(g).values) for name, g in graphs.items()}
    rows = []
    for a, b in itertools.combinations_with_replacement(ADDITIVITY_PARTS, 2):
        for param in PARAMETERS:
            if param in FALL_PARAMETERS and not (has_fall[a] and has_fall[b]):
                continue
            limits = deadline.limits()
            if limits is None:
                rows.append({"parts": [a, b], "parameter": param, "status": "TIMEOUT"})
                continue
            try:
                check = verify_join_additivity([graphs[a], graphs[b]], param, limits)
            except SearchTimeout:
                rows.append({"parts": [a, b], "parameter": param, "status": "TIMEOUT"})
                continue
            row = check.to_json()
            row["status"] = "TIMEOUT" if check.holds is None else ("PASS" if check.holds else "FAIL")
            rows.append(row)
    return rows


# --- gap construction ---------------------------------------------------------


def gap_construction(epsilon: int, deadline: Deadline) -> dict:
    limits = deadline.limits()
    if limits is None:
        return {"epsilon": epsilon, "rows": [{"status": "TIMEOUT"}]}
    report = theorem3_verify(epsilon, limits).to_json()
    for entry in report["entries"]:
        key = (entry["step"], entry.get("reading", ""))
        if entry["status"] == "REFUTED":
            entry["expected"] = key in EXPECTED_REFUTATIONS
        entry["outcome"] = entry["status"]
        if entry["status"].startswith("VERIFIED") or (entry["status"] == "REFUTED" and key in EXPECTED_REFUTATIONS):
            entry["status"] = "PASS"
        elif entry["status"] == "TIMEOUT":
            entry["status"] = "TIMEOUT"
        else:
            entry["status"] = "FAIL"
    report["rows"] = report.pop("entries")
    return report


def verify_paper(
    epsilon: int = 3, time_budget: float = 0.0, seed: int = 0, tuples: int = 200
) -> VerificationReport:
    """Run every section in a fixed order; the result is deterministic without a budget."""
    deadline = Deadline(time_budget)
    sections = {
        "reference_values": reference_values(deadline),
        "nonexistence": nonexistence(deadline),
        "join_composition": {"rows": [composition(seed, tuples), restriction()]},
        "join_additivity": additivity(deadline),
        "gap_construction": gap_construction(epsilon, deadline),
    }
    return VerificationReport(sections)
