"""All parameters of one graph in a single cross-checked report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import solvers
from .colorings import Coloring, classify
from .graph import Graph
from .search import UNLIMITED, SearchLimits
from .solvers import Status

PARAMETERS = ("chi", "fall_spectrum", "chi_f", "psi_f", "phi", "gamma", "partial_gamma", "psi")

# coloring class each witness must belong to
WITNESS_KIND = {
    "chi": "proper",
    "chi_f": "fall",
    "psi_f": "fall",
    "phi": "b_coloring",
    "gamma": "grundy",
    "partial_gamma": "partial_grundy",
    "psi": "complete",
}

_MAX_SOLVERS = {
    "phi": solvers.b_chromatic_number,
    "gamma": solvers.grundy_number,
    "partial_gamma": solvers.partial_grundy_number,
    "psi": solvers.achromatic_number,
}

# (smaller, larger) pairs of the parameter chain; pairs touching the fall
# parameters only apply when the fall spectrum is nonempty
CHAIN = (
    ("chi", "chi_f"),
    ("chi_f", "psi_f"),
    ("psi_f", "phi"),
    ("psi_f", "gamma"),
    ("phi", "partial_gamma"),
    ("gamma", "partial_gamma"),
    ("partial_gamma", "psi"),
)


class ChainViolation(AssertionError):
    pass


class WitnessRejected(AssertionError):
    pass


@dataclass
class ParameterReport:
    graph: Graph
    values: dict[str, object] = field(default_factory=dict)
    witnesses: dict[str, Coloring] = field(default_factory=dict)
    bounds_used: dict[str, tuple[int, int]] = field(default_factory=dict)
    status: dict[str, Status] = field(default_factory=dict)

    def __getattr__(self, name: str):
        if name in PARAMETERS:
            return self.__dict__["values"].get(name)
        raise AttributeError(name)

    @property
    def complete(self) -> bool:
        return all(s is Status.EXACT for s in self.status.values())

    def to_json(self) -> dict:
        params = {}
        for name in PARAMETERS:
            if name in self.values:
                v = self.values[name]
                params[name] = list(v) if isinstance(v, tuple) else v
        return {
            "graph": {"n": self.graph.n, "m": self.graph.m, "name": self.graph.name},
            "parameters": params,
            "witnesses": {name: self.witnesses[name].to_json() for name in PARAMETERS if name in self.witnesses},
            "status": {name: self.status[name].value for name in PARAMETERS if name in self.status},
            "bounds": {name: list(self.bounds_used[name]) for name in PARAMETERS if name in self.bounds_used},
        }


def parameter_report(
    g: Graph, limits: SearchLimits = UNLIMITED, select: Iterable[str] | None = None
) -> ParameterReport:
    """Run the selected solvers (all by default), check every witness, assert the chain."""
    wanted = set(PARAMETERS if select is None else select)
    unknown = wanted - set(PARAMETERS)
    if unknown:
        raise ValueError(f"unknown parameters: {sorted(unknown)}")
    rep = ParameterReport(g)

    if "chi" in wanted:
        sol = solvers.chromatic_number(g, limits)
        _record(rep, "chi", sol.value, sol.witness, sol.status, sol.bounds)

    if wanted & {"fall_spectrum", "chi_f", "psi_f"}:
        spec = solvers.fall_spectrum(g, limits)
        fall_bounds = (solvers.clique_number(g), g.min_degree + 1)
        if "fall_spectrum" in wanted:
            _record(rep, "fall_spectrum", spec.values, None, spec.status, fall_bounds)
        for name, value in (("chi_f", spec.chi_f), ("psi_f", spec.psi_f)):
            if name not in wanted:
                continue
            # the extreme values are settled only if no k beyond them is undecided
            settled = spec.status is Status.EXACT or (
                value is not None
                and (
                    all(k > value for k in spec.undecided)
                    if name == "chi_f"
                    else all(k < value for k in spec.undecided)
                )
            )
            status = Status.EXACT if settled else Status.TIMEOUT
            witness = spec.witnesses.get(value) if value is not None else None
            _record(rep, name, value, witness, status, fall_bounds)

    for name, fn in _MAX_SOLVERS.items():
        if name in wanted:
            sol = fn(g, limits)
            _record(rep, name, sol.value, sol.witness, sol.status, sol.bounds)

    check_chain(rep)
    return rep


def _record(rep, name, value, witness, status, bounds) -> None:
    if witness is not None:
        kind = WITNESS_KIND[name]
        if not classify(rep.graph, witness).has(kind):
            raise WitnessRejected(f"{name} witness is not a {kind} coloring")
        rep.witnesses[name] = witness
    rep.values[name] = value
    rep.status[name] = status
    rep.bounds_used[name] = tuple(bounds)


def check_chain(rep: ParameterReport) -> None:
    exact = {n: rep.values[n] for n, s in rep.status.items() if s is Status.EXACT}
    spectrum = exact.get("fall_spectrum")
    for low, high in CHAIN:
        # chi_f / psi_f are None exactly when the fall spectrum is empty
        if exact.get(low) is None or exact.get(high) is None:
            continue
        if exact[low] > exact[high]:
            raise ChainViolation(f"{low}={exact[low]} exceeds {high}={exact[high]} on {rep.graph!r}")
    if spectrum:
        lo = exact.get("chi", 1)
        hi = rep.graph.min_degree + 1
        if not all(lo <= k <= hi for k in spectrum):
            raise ChainViolation(f"fall spectrum {spectrum} outside [{lo}, {hi}]")
