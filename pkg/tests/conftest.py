import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# fixed example sequence so test logs are reproducible
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

from fallcolor.graph import Graph, from_edge_list  # noqa: E402


def from_nx(h: nx.Graph, name: str = "") -> Graph:
    nodes = sorted(h.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in h.edges], name)


def atlas(max_n: int, connected_only: bool = False) -> list[Graph]:
    """Every graph on 1..max_n vertices from the networkx atlas (max_n <= 7)."""
    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        if not 1 <= h.number_of_nodes() <= max_n:
            continue
        if connected_only and not nx.is_connected(h):
            continue
        out.append(from_nx(h, f"atlas{i}"))
    return out


@pytest.fixture(scope="session")
def atlas6():
    return atlas(6)


@pytest.fixture(scope="session")
def atlas5():
    return atlas(5)
