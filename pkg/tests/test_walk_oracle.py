import numpy as np
import pytest

from walkforge.sdk import (
    Distance,
    Graph,
    PrimeField,
    bfs_reachability,
    build_index,
    crt_exact_counts,
    distance,
    fallback_power_row,
    frobenius_decompose,
    mat_pow,
    query_all_lengths,
    query_prefix_count,
    query_walk_count,
)
from walkforge.sdk.exceptions import BoundTooSmall, ConfigError, ContractError, HorizonExceeded, VertexOutOfRange
from walkforge.sdk.matrix import DenseMatrix, mat_mul
from walkforge.sdk.oracle import dp_walk_counts


def index_of(g, field=None, seed=0):
    field = field or PrimeField()
    return build_index(frobenius_decompose(g.adjacency_matrix(field), seed), g)


def test_three_cycle_counts(three_cycle):
    idx = index_of(three_cycle)
    assert idx.mu == 3
    assert query_walk_count(idx, 0, 0, 3) == 1
    assert query_walk_count(idx, 0, 2, 2) == 1
    assert query_walk_count(idx, 0, 2, 1) == 0
    assert query_all_lengths(idx, 1, 1).counts == (0, 0, 1)
    assert query_prefix_count(idx, 0, 0, 3) == 1
    assert query_prefix_count(idx, 0, 0, 2) == 0


def test_self_loop_vertex():
    g = Graph.from_edges(1, [(0, 0)])
    idx = index_of(g)
    assert idx.mu == 1
    assert query_walk_count(idx, 0, 0, 1) == 1


def test_edgeless_graph_is_all_zero():
    idx = index_of(Graph(4))
    assert idx.degrees == (1, 1, 1, 1)
    for u in range(4):
        for v in range(4):
            assert query_all_lengths(idx, u, v).counts == (0,)


def test_strip_windows_equal_block_powers(field, random_graphs):
    g = random_graphs(1, max_n=16, seed=21)[0]
    form = frobenius_decompose(g.adjacency_matrix(field))
    idx = build_index(form, g)
    for strip, block, offset in zip(idx.strips, form.blocks, form.block_offsets):
        u_block = DenseMatrix(form.u.data[:, offset:offset + block.degree], field)
        for k in range(1, idx.mu + 1):
            expected = mat_mul(u_block, mat_pow(block.matrix(), k)).data
            assert np.array_equal(strip[:, k - 1:k - 1 + block.degree], expected)


def test_single_block_strip_is_uf_plus_fresh_columns(field, three_cycle):
    form = frobenius_decompose(three_cycle.adjacency_matrix(field))
    idx = build_index(form, three_cycle)
    assert len(idx.strips) == 1
    f = form.frobenius_matrix()
    uf = mat_mul(form.u, f).data
    uf_next = mat_mul(form.u, mat_pow(f, form.n + 1)).data
    assert np.array_equal(idx.strips[0], np.concatenate([uf, uf_next], axis=1))


def test_queries_match_dp_oracle(field, random_graphs):
    for g in random_graphs(12, max_n=16, seed=22):
        idx = index_of(g, field)
        exact = dp_walk_counts(g, idx.mu)
        for u in range(g.n):
            for v in range(g.n):
                truth = [c % field.p for c in exact.counts(u, v)]
                assert list(query_all_lengths(idx, u, v).counts) == truth
                for k in range(1, idx.mu + 1):
                    assert query_walk_count(idx, u, v, k) == truth[k - 1]
                    assert query_prefix_count(idx, u, v, k) == sum(truth[:k]) % field.p


def test_prefix_at_horizon_is_sum_of_all_lengths(random_graphs):
    g = random_graphs(1, max_n=20, seed=23)[0]
    idx = index_of(g)
    for u in range(g.n):
        assert query_prefix_count(idx, u, 0, idx.mu) == sum(query_all_lengths(idx, u, 0).counts) % idx.p


def test_length_contract(three_cycle):
    idx = index_of(three_cycle)
    with pytest.raises(ContractError):
        query_walk_count(idx, 0, 1, 0)
    with pytest.raises(HorizonExceeded):
        query_walk_count(idx, 0, 1, 4)
    with pytest.raises(HorizonExceeded):
        query_prefix_count(idx, 0, 1, 4)
    with pytest.raises(VertexOutOfRange):
        query_walk_count(idx, 0, 3, 1)


def test_distance_examples(three_cycle, dag):
    idx = index_of(three_cycle)
    assert distance(idx, 0, 0) == Distance.dist(0)
    assert distance(idx, 0, 2) == Distance.dist(2)
    assert distance(idx, 0, 2, method="scan") == Distance.dist(2)
    assert distance(index_of(dag), 4, 0).status == "unreachable"


def test_distance_beyond_horizon_and_fallback(four_cycle_antiparallel):
    idx = index_of(four_cycle_antiparallel)
    assert idx.mu == 1
    assert distance(idx, 0, 1) == Distance.dist(1)
    assert distance(idx, 0, 2) == Distance.beyond_horizon()
    assert distance(idx, 0, 2, fallback=True) == Distance.dist(2, via_fallback=True)


def test_distance_matches_bfs(random_graphs):
    for g in random_graphs(20, max_n=14, seed=24):
        idx = index_of(g)
        for u in range(g.n):
            reach = bfs_reachability(g, u)
            for v in range(g.n):
                d = distance(idx, u, v)
                assert d == distance(idx, u, v, method="scan")
                if v not in reach:
                    assert d.status == "unreachable"
                elif reach[v] <= idx.mu:
                    assert d.value == reach[v]
                else:
                    assert d.status == "beyond_horizon"
                    assert distance(idx, u, v, fallback=True).value == reach[v]


def test_fallback_power_row(field, three_cycle, random_graphs):
    rows = fallback_power_row(three_cycle, 0, 3, field)
    assert rows[0].tolist() == three_cycle.adjacency[0].tolist()
    assert rows[2].tolist() == [1, 0, 0]
    g = random_graphs(1, max_n=12, seed=25)[0]
    exact = dp_walk_counts(g, g.n)
    rows = fallback_power_row(g, 1, g.n, field)
    for k in range(1, g.n + 1):
        assert rows[k - 1].tolist() == [exact.count(1, v, k) % field.p for v in range(g.n)]


def test_index_reports_shape(three_cycle):
    idx = index_of(three_cycle)
    meta = idx.meta()
    assert meta["n"] == 3
    assert meta["degrees"] == [3]
    assert meta["graph_hash"] == three_cycle.hash()
    assert idx.stored_columns == 6
    assert idx.stored_columns <= 2 * idx.n


def test_crt_three_cycle(three_cycle):
    vector = crt_exact_counts(three_cycle, 0, 0)
    assert vector.exactness == "exact_crt"
    assert vector.counts == (0, 0, 1)


def test_crt_small_counts_equal_single_prime(random_graphs):
    g = random_graphs(1, max_n=8, seed=26)[0]
    vector = crt_exact_counts(g, 0, 1, primes=[998244353, 1004535809])
    single = query_all_lengths(index_of(g), 0, 1)
    assert vector.counts[:len(single)] == single.counts[:len(vector)]


def companion_walk_graph():
    """Path 0 -> ... -> 9 plus arcs from 9 to every vertex; closed walks at 9 double each step."""
    return Graph.from_edges(10, [(i, i + 1) for i in range(9)] + [(9, j) for j in range(10)])


def test_crt_recovers_counts_above_the_primes():
    g = companion_walk_graph()
    vector = crt_exact_counts(g, 9, 9, primes=[101, 103, 107])
    assert vector.primes == (101, 103, 107)
    assert vector.counts == tuple(2 ** (k - 1) for k in range(1, 11))
    assert list(vector.counts) == dp_walk_counts(g, 10).counts(9, 9)


def test_crt_detects_a_product_that_is_too_small():
    with pytest.raises(BoundTooSmall):
        crt_exact_counts(companion_walk_graph(), 9, 9, primes=[101])


def test_crt_rejects_bad_primes(three_cycle):
    with pytest.raises(ConfigError):
        crt_exact_counts(three_cycle, 0, 0, primes=[7, 7])
    with pytest.raises(BoundTooSmall):
        crt_exact_counts(three_cycle, 0, 0, primes=[7], bound=100)
