import random

import pytest

from leakyforce import Graph


def connected_catalog(max_n=6):
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    nx = pytest.importorskip("networkx")
    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        if 0 < h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(Graph.from_edges(h.number_of_nodes(), h.edges(), label=f"atlas{i}"))
    return out


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, label=f"gnp({n},{p})")


@pytest.fixture
def rng():
    return random.Random(20260417)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
