"""Every solver against exhaustive enumeration on small graphs."""

import random

import pytest

from conftest import atlas
from fallcolor.colorings import classify
from fallcolor.graph import complete_bipartite, cycle, path
from fallcolor.report import WITNESS_KIND, parameter_report
from fallcolor.search import KSearch, Mode
from oracle import all_colorings_of_kind, oracle

SMALL = atlas(6)


def _check(g):
    expected = oracle(g.adj)
    rep = parameter_report(g)
    assert rep.complete
    for name in ("chi", "fall_spectrum", "chi_f", "psi_f", "phi", "gamma", "partial_gamma", "psi"):
        assert rep.values[name] == expected.get(name), (g.name, name)
    for name, witness in rep.witnesses.items():
        assert classify(g, witness).has(WITNESS_KIND[name])


@pytest.mark.parametrize("g", SMALL, ids=lambda g: g.name)
def test_all_graphs_up_to_six_vertices(g):
    _check(g)


def _seven_vertex_sample():
    rng = random.Random(7)
    graphs = [g for g in atlas(7) if g.n == 7]
    return rng.sample(graphs, 12) + [path(7), cycle(7), complete_bipartite(3, 4)]


@pytest.mark.parametrize("g", _seven_vertex_sample(), ids=lambda g: g.name or "g7")
def test_sample_of_seven_vertex_graphs(g):
    _check(g)


MODES = {
    Mode.PROPER: "proper",
    Mode.FALL: "fall",
    Mode.B: "b_coloring",
    Mode.GRUNDY: "grundy",
    Mode.PARTIAL_GRUNDY: "partial_grundy",
    Mode.COMPLETE: "complete",
}


@pytest.mark.parametrize("g", atlas(5), ids=lambda g: g.name)
def test_ksearch_decides_every_mode(g):
    for mode, kind in MODES.items():
        for k in range(1, g.n + 1):
            exists = len(all_colorings_of_kind(g.adj, k, kind)) > 0
            found = KSearch(g, k, mode).run()
            assert (found is not None) == exists, (g.name, mode, k)
            if found is not None:
                assert classify(g, found).has(kind)
