"""walkforge SDK - walk counting and shortest cycles through the Frobenius form."""

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterator, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from dotenv import load_dotenv
from loguru import logger

from . import graph_algos, io, oracle
from .config import Config
from .exceptions import ConfigError, DecompositionFailure, HorizonExceeded, VerificationMismatch
from .field import PrimeField
from .frobenius import FrobeniusForm, frobenius_decompose
from .graph import Graph, random_digraph, random_strongly_connected
from .models import (
    BenchRow,
    CycleSets,
    DiameterAudit,
    DiameterReport,
    Distance,
    VerifyReport,
    WalkCountVector,
)
from .utils import resolve_threads, stopwatch
from .walk_oracle import (
    WalkIndex,
    build_index,
    crt_exact_counts,
    distance,
    fallback_power_row,
    query_all_lengths,
    query_prefix_count,
    query_walk_count,
)

load_dotenv()

PathLike = Union[str, Path]
VERIFY_DENSITIES = (0.1, 0.3, 0.7)


class WalkForge:
    """Facade over preprocessing, queries and graph algorithms."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config.load()
        self.config.validate()
        self.field = PrimeField(self.config.prime)

    @property
    def threads(self) -> int:
        return resolve_threads(self.config.threads)

    # Loading and persistence

    def load_graph(self, path: PathLike) -> Graph:
        return io.read_edge_list(path)

    def load_index(self, path: PathLike) -> WalkIndex:
        return io.read_index(path)

    def load(self, path: PathLike) -> WalkIndex:
        """An index file as is, or an edge list preprocessed on the fly."""
        if io.looks_like_index(path):
            return self.load_index(path)
        return self.preprocess(self.load_graph(path))

    def save_index(self, idx: WalkIndex, path: PathLike) -> None:
        io.write_index(idx, path)

    # Preprocessing

    def decompose(self, g: Graph) -> FrobeniusForm:
        """Frobenius form under the configured prime.

        With ``random_prime`` the prime is sampled, and re-sampled whenever a
        whole retry budget fails.
        """
        form = self._decompose(g, self.config.seed, self.starting_field(self.config.seed))
        self.field = form.field
        return form

    def starting_field(self, seed: int) -> PrimeField:
        """The configured field, or one sampled from ``seed`` under ``random_prime``."""
        if not self.config.random_prime:
            return self.field
        return PrimeField.sample(np.random.default_rng(abs(seed)))

    def _decompose(self, g: Graph, seed: int, field: PrimeField) -> FrobeniusForm:
        try:
            return frobenius_decompose(g.adjacency_matrix(field), seed, self.config.retries)
        except DecompositionFailure:
            if not self.config.random_prime:
                raise

        rng = np.random.default_rng([abs(seed), field.p])
        tried: List[int] = [field.p]
        while True:
            logger.info(f"Re-sampling prime after failure with p={tried[-1]}")
            try:
                field = PrimeField.sample(rng, exclude=tried)
            except ConfigError as e:
                raise DecompositionFailure(f"Decomposition failed for every sampled prime {tried}") from e
            tried.append(field.p)
            try:
                return frobenius_decompose(g.adjacency_matrix(field), seed, self.config.retries)
            except DecompositionFailure:
                continue

    def build(self, form: FrobeniusForm, g: Graph) -> WalkIndex:
        """Walk index for a decomposed graph."""
        return build_index(form, g, strassen_threshold=self.config.strassen_threshold)

    def preprocess(self, g: Graph) -> WalkIndex:
        return self.build(self.decompose(g), g)

    # Queries

    def walk_count(self, idx: WalkIndex, u: int, v: int, k: int, fallback: Optional[bool] = None) -> int:
        fallback = self.config.fallback if fallback is None else fallback
        try:
            return query_walk_count(idx, u, v, k)
        except HorizonExceeded:
            if not fallback:
                raise
        return int(fallback_power_row(idx.graph, u, k, idx.field)[k - 1, v])

    def prefix_count(self, idx: WalkIndex, u: int, v: int, k: int, fallback: Optional[bool] = None) -> int:
        fallback = self.config.fallback if fallback is None else fallback
        try:
            return query_prefix_count(idx, u, v, k)
        except HorizonExceeded:
            if not fallback:
                raise
        rows = fallback_power_row(idx.graph, u, k, idx.field)
        return int(rows[:, v].sum() % idx.p)

    def all_lengths(self, idx: WalkIndex, u: int, v: int) -> WalkCountVector:
        return query_all_lengths(idx, u, v)

    def distance(
        self,
        idx: WalkIndex,
        u: int,
        v: int,
        method: Literal["binary", "scan"] = "binary",
        fallback: Optional[bool] = None,
    ) -> Distance:
        fallback = self.config.fallback if fallback is None else fallback
        return distance(idx, u, v, method=method, fallback=fallback)

    def exact(
        self,
        g: Graph,
        u: int,
        v: int,
        primes: Optional[Sequence[int]] = None,
        bound: Optional[int] = None,
    ) -> WalkCountVector:
        return crt_exact_counts(g, u, v, primes=primes, bound=bound, seed=self.config.seed,
                                retries=self.config.retries)

    # Graph algorithms

    def apaw(self, idx: WalkIndex) -> np.ndarray:
        return graph_algos.apaw(idx, self.threads)

    def iter_apaw(self, idx: WalkIndex) -> Iterator[Tuple[int, int, Tuple[int, ...]]]:
        return graph_algos.iter_apaw(idx, self.threads)

    def ansc(self, idx: WalkIndex) -> List[Optional[int]]:
        return graph_algos.ansc(idx, self.threads)

    def cycle_sets(self, idx: WalkIndex) -> CycleSets:
        return graph_algos.cycle_sets(idx, self.threads)

    def diameter_report(self, idx: WalkIndex) -> DiameterReport:
        return graph_algos.diameter_mu_report(idx.graph, idx)

    # Verification and benchmarks

    def verify(self, trials: int = 100, max_n: int = 20, seed: Optional[int] = None) -> VerifyReport:
        """Cross-check every production path against the brute-force oracles on random graphs.

        A production zero that disagrees with the exact count is re-run under a
        second prime before it counts as a mismatch. Under ``random_prime`` the
        run's prime is sampled from ``seed``.

        Raises:
            VerificationMismatch: with the offending edge list attached.
        """
        seed = self.config.seed if seed is None else seed
        field = self.starting_field(seed)
        report = VerifyReport(trials=trials, p=field.p)
        report.diameter_audit.p = field.p

        def trial(t: int) -> Tuple[int, List[dict], Optional[DiameterReport]]:
            rng = np.random.default_rng([abs(seed), t])
            n = int(rng.integers(2, max_n + 1))
            density = VERIFY_DENSITIES[t % len(VERIFY_DENSITIES)]
            g = random_digraph(n, density, seed=int(rng.integers(2**31)), loops=bool(t % 2))
            return self._verify_graph(g, rng, field)

        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            for checked, rechecked, diameter_report in executor.map(trial, range(trials)):
                report.checked_queries += checked
                report.rechecked_zeros.extend(rechecked)
                if diameter_report is not None:
                    report.diameter_audit.reports.append(diameter_report)

        return report

    def verify_graph(self, g: Graph, seed: Optional[int] = None) -> VerifyReport:
        """Oracle cross-check of a single graph."""
        seed = self.config.seed if seed is None else seed
        field = self.starting_field(seed)
        checked, rechecked, diameter_report = self._verify_graph(g, np.random.default_rng(abs(seed)), field)
        report = VerifyReport(trials=1, p=field.p, checked_queries=checked, rechecked_zeros=rechecked)
        report.diameter_audit.p = field.p
        if diameter_report is not None:
            report.diameter_audit.reports.append(diameter_report)
        return report

    def _verify_graph(self, g: Graph, rng: np.random.Generator, field: PrimeField):
        form = self._decompose(g, int(rng.integers(2**31)), field)
        if form.field.p != field.p:
            logger.warning(f"Verified under p={form.field.p} after p={field.p} failed to decompose")
        field = form.field
        p = field.p
        idx = self.build(form, g)
        exact = oracle.dp_walk_counts(g, idx.mu)
        instance = io.format_edge_list(g)

        def mismatch(message: str) -> VerificationMismatch:
            logger.error(f"{message}\n{instance}")
            return VerificationMismatch(message, instance=instance)

        if g.n <= oracle.MAX_SMITH_N:
            expected = [len(f) - 1 for f in oracle.invariant_factors_bruteforce(g.adjacency_matrix(field))]
            if list(form.degrees) != expected:
                raise mismatch(f"Block degrees {list(form.degrees)} differ from invariant factors {expected}")

        checked = 0
        rechecked: List[dict] = []
        second: Optional[WalkIndex] = None
        table = graph_algos.apaw(idx, threads=1)
        naive = graph_algos.naive_apaw(g, idx.mu, field, self.config.strassen_threshold)
        if not np.array_equal(table, naive):
            raise mismatch("APAW differs from iterated products")

        for u in range(g.n):
            for v in range(g.n):
                truth = exact.counts(u, v)
                for k in range(1, idx.mu + 1):
                    got = query_walk_count(idx, u, v, k)
                    checked += 1
                    if got != truth[k - 1] % p:
                        raise mismatch(f"walk_count({u}, {v}, {k}) = {got}, expected {truth[k - 1] % p}")
                    if got == 0 and truth[k - 1] != 0:
                        if second is None:
                            field = PrimeField.sample(rng, exclude=[p])
                            second = self.build(frobenius_decompose(g.adjacency_matrix(field), 0), g)
                        again = query_walk_count(second, u, v, k) if k <= second.mu else None
                        rechecked.append({"u": u, "v": v, "k": k, "p": second.p, "value": again})
                    if query_prefix_count(idx, u, v, k) != sum(truth[:k]) % p:
                        raise mismatch(f"prefix_count({u}, {v}, {k}) differs from the oracle")
                if list(table[u, v]) != [c % p for c in truth]:
                    raise mismatch(f"all_lengths({u}, {v}) differs from the oracle")
                d = distance(idx, u, v, method="scan")
                if distance(idx, u, v, method="binary") != d:
                    raise mismatch(f"distance({u}, {v}) differs between binary search and scan")
                bfs = graph_algos.bfs_reachability(g, u).get(v)
                if bfs is None and d.status != "unreachable":
                    raise mismatch(f"distance({u}, {v}) should be unreachable")
                if bfs is not None and bfs <= idx.mu and d.value != bfs:
                    raise mismatch(f"distance({u}, {v}) = {d.value}, breadth-first search says {bfs}")

        shortest = graph_algos.ansc(idx, threads=1)
        for u in range(g.n):
            if shortest[u] != oracle.bfs_shortest_cycle(g, u):
                raise mismatch(f"Shortest cycle through {u} differs from breadth-first search")

        diameter_report = graph_algos.diameter_mu_report(g, idx) if g.is_strongly_connected() else None
        if diameter_report is not None and not diameter_report.within_minpoly:
            raise mismatch(
                f"Diameter {diameter_report.diameter} exceeds the minimal polynomial degree "
                f"{diameter_report.minpoly_deg}"
            )
        return checked, rechecked, diameter_report

    def audit(self, count: int, n: int, density: float, seed: Optional[int] = None) -> DiameterAudit:
        seed = self.config.seed if seed is None else seed
        graphs = (random_strongly_connected(n, density, seed=abs(seed) + i) for i in range(count))
        return graph_algos.audit_diameter_bounds(graphs, self.starting_field(seed), seed,
                                                 self.config.strassen_threshold)

    def bench(self, graphs: Sequence[Graph], baseline: bool = True) -> List[BenchRow]:
        """Wall-clock APAW against iterated products."""
        rows = []
        for g in graphs:
            with stopwatch() as pre:
                idx = self.preprocess(g)
            with stopwatch() as fast:
                graph_algos.apaw(idx, self.threads)
            row = BenchRow(n=g.n, m=g.m, mu=idx.mu, preprocess_seconds=pre["seconds"],
                           apaw_seconds=fast["seconds"])
            if baseline:
                with stopwatch() as slow:
                    graph_algos.naive_apaw(g, idx.mu, idx.field, self.config.strassen_threshold)
                row.naive_seconds = slow["seconds"]
            logger.debug(f"bench n={g.n}: {row.to_dict()}")
            rows.append(row)
        return rows


__all__ = ["WalkForge"]
