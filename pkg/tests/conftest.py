"""Shared fixtures."""

import numpy as np
import pytest

from walkforge.sdk import CompanionBlock, Graph, PrimeField, random_digraph
from walkforge.sdk.io import write_edge_list

# Last column (1, 2, 3, 4, 5), i.e. x^5 - 5x^4 - 4x^3 - 3x^2 - 2x - 1
QUINTIC_COEFFS = (-1, -2, -3, -4, -5)


@pytest.fixture(autouse=True)
def walkforge_home(tmp_path, monkeypatch):
    """Keep every test away from the real ~/.walkforge and engine env vars."""
    home = tmp_path / "walkforge-home"
    monkeypatch.setenv("WALKFORGE_HOME", str(home))
    for key in ("PRIME", "RANDOM_PRIME", "SEED", "THREADS", "RETRIES", "STRASSEN_THRESHOLD", "FALLBACK", "DEBUG"):
        monkeypatch.delenv(f"WALKFORGE_{key}", raising=False)
    return home


@pytest.fixture
def field():
    return PrimeField()


@pytest.fixture
def small_field():
    return PrimeField(7)


@pytest.fixture
def three_cycle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def four_cycle_antiparallel():
    arcs = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return Graph.from_edges(4, arcs + [(v, u) for u, v in arcs])


@pytest.fixture
def loop_and_two_cycle():
    """Self-loop at 0 plus the 2-cycle 1 <-> 2."""
    return Graph.from_edges(3, [(0, 0), (1, 2), (2, 1)])


@pytest.fixture
def dag():
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def quintic_block(field):
    return CompanionBlock(QUINTIC_COEFFS, field)


@pytest.fixture
def random_graphs():
    """Seeded digraphs mixing densities, sizes and self-loops."""
    def make(count, max_n=16, seed=0):
        rng = np.random.default_rng(seed)
        graphs = []
        for i in range(count):
            n = int(rng.integers(2, max_n + 1))
            density = (0.1, 0.3, 0.6)[i % 3]
            graphs.append(random_digraph(n, density, seed=int(rng.integers(2**31)), loops=bool(i % 2)))
        return graphs
    return make


@pytest.fixture
def edge_list_file(tmp_path):
    def write(graph, name="graph.txt"):
        path = tmp_path / name
        write_edge_list(graph, path)
        return path
    return write
