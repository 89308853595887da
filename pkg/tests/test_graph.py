import numpy as np
import pytest

from walkforge.sdk import Graph, bfs_reachability, random_digraph, random_strongly_connected
from walkforge.sdk.exceptions import ContractError, VertexOutOfRange


def test_adjacency(three_cycle):
    assert three_cycle.m == 3
    assert three_cycle.adjacency.tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert three_cycle.successors(2) == [0]
    assert three_cycle.sorted_edges() == [(0, 1), (1, 2), (2, 0)]


def test_from_adjacency_round_trip(four_cycle_antiparallel):
    again = Graph.from_adjacency(four_cycle_antiparallel.adjacency)
    assert again == four_cycle_antiparallel
    assert again.hash() == four_cycle_antiparallel.hash()


def test_validation():
    with pytest.raises(ContractError):
        Graph(0)
    with pytest.raises(VertexOutOfRange):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ContractError):
        Graph.from_adjacency(np.array([[0, 2], [0, 0]]))
    with pytest.raises(VertexOutOfRange):
        Graph(3).check_vertex(3)


def test_bfs_reachability(dag):
    assert bfs_reachability(dag, 0) == {0: 0, 1: 1, 2: 1, 3: 2, 4: 3}
    assert bfs_reachability(dag, 4) == {4: 0}


def test_packed_adjacency_length():
    g = Graph.from_edges(5, [(0, 0), (4, 4)])
    packed = g.packed_adjacency()
    assert len(packed) == 4
    assert packed[0] == 0b10000000


def test_hash_distinguishes_graphs(three_cycle):
    reversed_cycle = Graph.from_edges(3, [(1, 0), (2, 1), (0, 2)])
    assert three_cycle.hash() != reversed_cycle.hash()
    assert len(three_cycle.hash()) == 16


def test_random_generators_are_seeded():
    assert random_digraph(12, 0.3, seed=4) == random_digraph(12, 0.3, seed=4)
    g = random_digraph(12, 1.0, seed=4)
    assert g.m == 12 * 11
    assert random_digraph(6, 1.0, seed=1, loops=True).m == 36


def test_random_strongly_connected():
    for seed in range(10):
        g = random_strongly_connected(15, 0.05, seed=seed)
        assert g.is_strongly_connected()
        assert all(u != v for u, v in g.edges)


def test_strong_connectivity(three_cycle, dag):
    assert three_cycle.is_strongly_connected()
    assert not dag.is_strongly_connected()
