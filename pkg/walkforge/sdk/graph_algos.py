"""Graph-level algorithms over a walk index: APAW, shortest cycles, cycle sets
and the diameter-versus-degree audit."""

from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Deque, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np
from loguru import logger

from .config import DEFAULT_RETRIES
from .field import PrimeField
from .frobenius import frobenius_decompose
from .graph import Graph, bfs_reachability
from .matrix import mat_mul
from .models import CycleProfile, CycleSets, DiameterAudit, DiameterReport
from .utils import resolve_threads
from .walk_oracle import WalkIndex, build_index, fallback_power_row, query_all_lengths

Source = Union[Graph, WalkIndex]

IN_FLIGHT_PER_WORKER = 4


def index_for_graph(g: Graph, field: Optional[PrimeField] = None, seed: int = 0,
                    retries: int = DEFAULT_RETRIES, strassen_threshold: Optional[int] = None) -> WalkIndex:
    field = field or PrimeField()
    form = frobenius_decompose(g.adjacency_matrix(field), seed, retries)
    return build_index(form, g, strassen_threshold=strassen_threshold)


def _as_index(source: Source) -> WalkIndex:
    return source if isinstance(source, WalkIndex) else index_for_graph(source)


def iter_apaw(source: Source, threads: Optional[int] = None) -> Iterator[Tuple[int, int, Tuple[int, ...]]]:
    """Yield ``(u, v, counts)`` for every ordered pair in row-major order.

    At most ``threads * IN_FLIGHT_PER_WORKER`` pairs are queued at once.
    """
    idx = _as_index(source)
    pairs = ((u, v) for u in range(idx.n) for v in range(idx.n))

    def work(pair: Tuple[int, int]) -> Tuple[int, int, Tuple[int, ...]]:
        u, v = pair
        return u, v, query_all_lengths(idx, u, v).counts

    workers = resolve_threads(threads)
    window = workers * IN_FLIGHT_PER_WORKER
    pending: Deque[Future] = deque()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for pair in pairs:
            if len(pending) >= window:
                yield pending.popleft().result()
            pending.append(executor.submit(work, pair))
        while pending:
            yield pending.popleft().result()


def apaw(source: Source, threads: Optional[int] = None) -> np.ndarray:
    """Table ``T[u, v, k - 1] = (A^k)_{u,v} mod p`` for ``k <= mu``."""
    idx = _as_index(source)
    table = np.zeros((idx.n, idx.n, idx.mu), dtype=np.int64)
    for u, v, counts in iter_apaw(idx, threads):
        table[u, v] = counts
    return table


def naive_apaw(g: Graph, K: int, field: Optional[PrimeField] = None,
               strassen_threshold: Optional[int] = None) -> np.ndarray:
    """Same table by ``K - 1`` successive matrix products."""
    field = field or PrimeField()
    adjacency = g.adjacency_matrix(field)
    table = np.zeros((g.n, g.n, K), dtype=np.int64)
    power = adjacency
    for k in range(K):
        if k:
            power = mat_mul(power, adjacency, strassen_threshold)
        table[:, :, k] = power.data
    return table


def cycle_profile(source: Source, u: int, fallback: bool = True) -> CycleProfile:
    """Closed-walk counts through ``u``; the first nonzero gives the shortest cycle."""
    idx = _as_index(source)
    counts = query_all_lengths(idx, u, u).counts
    shortest = next((k for k, c in enumerate(counts, start=1) if c), None)
    if shortest is not None or not fallback or idx.mu >= idx.n:
        return CycleProfile(u=u, counts=counts, shortest=shortest)

    rows = fallback_power_row(idx.graph, u, idx.n, idx.field)
    for k in range(idx.mu + 1, idx.n + 1):
        if rows[k - 1, u]:
            return CycleProfile(u=u, counts=counts, shortest=k, via_fallback=True)
    return CycleProfile(u=u, counts=counts, shortest=None, via_fallback=True)


def _profiles(idx: WalkIndex, threads: Optional[int]) -> List[CycleProfile]:
    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as executor:
        return list(executor.map(lambda u: cycle_profile(idx, u), range(idx.n)))


def ansc(source: Source, threads: Optional[int] = None) -> List[Optional[int]]:
    """Shortest cycle length through every vertex, ``None`` when there is none."""
    return [profile.shortest for profile in _profiles(_as_index(source), threads)]


def cycle_sets(source: Source, threads: Optional[int] = None) -> CycleSets:
    """``S_c`` for ``c = 1..n``; a shortest closed walk is always a simple cycle."""
    idx = _as_index(source)
    shortest = ansc(idx, threads)
    sets = tuple(
        frozenset(u for u, s in enumerate(shortest) if s is not None and s <= c)
        for c in range(1, idx.n + 1)
    )
    return CycleSets(sets)


def diameter(g: Graph) -> int:
    """Largest BFS distance over reachable ordered pairs."""
    return max(
        (d for _, lengths in nx.all_pairs_shortest_path_length(g.digraph) for d in lengths.values()),
        default=0,
    )


def diameter_mu_report(g: Graph, source: Optional[WalkIndex] = None) -> DiameterReport:
    """Compare the diameter with the smallest and largest invariant factor degrees.

    Never raises on a violated bound; violations are logged.
    """
    idx = source if source is not None else index_for_graph(g)
    report = DiameterReport(
        n=g.n,
        diameter=diameter(g),
        strongly_connected=g.is_strongly_connected(),
        mu_min=idx.mu,
        minpoly_deg=idx.minpoly_deg,
    )
    if not report.within_minpoly:
        logger.warning(f"Diameter {report.diameter} exceeds minimal polynomial degree {report.minpoly_deg}")
    elif not report.within_mu_min:
        logger.warning(f"Diameter {report.diameter} exceeds smallest invariant factor degree {report.mu_min}")
    return report


def audit_diameter_bounds(graphs: Iterable[Graph], field: Optional[PrimeField] = None, seed: int = 0,
                          strassen_threshold: Optional[int] = None) -> DiameterAudit:
    field = field or PrimeField()
    audit = DiameterAudit(p=field.p)
    for g in graphs:
        idx = index_for_graph(g, field, seed, strassen_threshold=strassen_threshold)
        audit.reports.append(diameter_mu_report(g, idx))
    logger.info(
        f"Diameter audit: {audit.total} graphs, {audit.mu_min_violations} above mu_min, "
        f"{audit.minpoly_violations} above minpoly degree"
    )
    return audit


__all__ = [
    "Graph",
    "bfs_reachability",
    "index_for_graph",
    "iter_apaw",
    "apaw",
    "naive_apaw",
    "cycle_profile",
    "ansc",
    "cycle_sets",
    "diameter",
    "diameter_mu_report",
    "audit_diameter_bounds",
]
