"""Strip index over a Frobenius form and the walk-count queries it answers.

For a block ``C_i`` of degree ``l`` with columns ``U_i`` of ``U`` the strip is
the ``n x (l + mu)`` matrix ``[U_i v_1, ..., U_i v_{l+mu}]`` where
``v_t = C_i^t e_1``. By the cyclic property the columns of ``U_i C_i^k`` are
strip columns ``k..k+l-1``, so a window of row ``u`` dotted with the aligned
rows of ``U^{-1}`` gives the block's share of ``(A^k)_{u,v}``.
"""

from dataclasses import dataclass
from math import prod
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy import prevprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_crt

from .config import DEFAULT_RETRIES
from .exceptions import BoundTooSmall, ConfigError, ContractError, HorizonExceeded
from .field import NTT_PRIMES, PrimeField
from .frobenius import FrobeniusForm, frobenius_decompose
from .graph import Graph, bfs_reachability
from .hankel import HankelSpec, hankel_matvec
from .matrix import DenseMatrix, mat_mul, mat_pow
from .models import Distance, WalkCountVector


@dataclass(frozen=True, eq=False)
class WalkIndex:
    field: PrimeField
    mu: int
    degrees: Tuple[int, ...]
    strips: Tuple[np.ndarray, ...]
    prefix_strips: Tuple[np.ndarray, ...]
    u_inv: DenseMatrix
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def minpoly_deg(self) -> int:
        return self.degrees[-1]

    @property
    def block_offsets(self) -> Tuple[int, ...]:
        return tuple(int(o) for o in np.concatenate([[0], np.cumsum(self.degrees)[:-1]]))

    @property
    def stored_columns(self) -> int:
        return sum(s.shape[1] for s in self.strips)

    @property
    def graph_hash(self) -> str:
        return self.graph.hash()

    def meta(self) -> dict:
        return {
            "n": self.n,
            "mu": self.mu,
            "degrees": list(self.degrees),
            "minpoly_deg": self.minpoly_deg,
            "p": self.p,
            "graph_hash": self.graph_hash,
        }

    def segments(self, v: int) -> Iterable[Tuple[np.ndarray, np.ndarray, np.ndarray, int]]:
        """Per block: (strip, prefix strip, aligned column ``v`` of ``U^{-1}``, degree)."""
        column = self.u_inv.data[:, v]
        for strip, prefix, offset, degree in zip(self.strips, self.prefix_strips, self.block_offsets, self.degrees):
            yield strip, prefix, column[offset:offset + degree], degree


def build_index(form: FrobeniusForm, graph: Optional[Graph] = None,
                strassen_threshold: Optional[int] = None) -> WalkIndex:
    """Strip table for ``form``; ``graph`` defaults to the reconstructed adjacency."""
    field = form.field
    p = field.p
    mu = form.mu_min
    if graph is None:
        graph = Graph.from_adjacency(form.reconstruct().data)

    strips, prefixes = [], []
    for block, offset in zip(form.blocks, form.block_offsets):
        degree = block.degree
        u_block = DenseMatrix(form.u.data[:, offset:offset + degree], field)
        companion = block.matrix()
        left = mat_mul(u_block, companion).data
        right = mat_mul(u_block, mat_pow(companion, mu + 1, strassen_threshold)).data
        strip = np.concatenate([left, right[:, degree - mu:]], axis=1)
        strip.setflags(write=False)
        prefix = np.cumsum(strip, axis=1) % p
        prefix.setflags(write=False)
        strips.append(strip)
        prefixes.append(prefix)

    index = WalkIndex(
        field=field,
        mu=mu,
        degrees=form.degrees,
        strips=tuple(strips),
        prefix_strips=tuple(prefixes),
        u_inv=form.u_inv,
        graph=graph,
    )
    logger.debug(f"Built index n={index.n} mu={mu} blocks={len(strips)} columns={index.stored_columns}")
    return index


def _check_pair(idx: WalkIndex, u: int, v: int) -> None:
    idx.graph.check_vertex(u)
    idx.graph.check_vertex(v)


def _check_length(idx: WalkIndex, k: int) -> None:
    if k < 1:
        raise ContractError(f"Length must be at least 1, got {k}")
    if k > idx.mu:
        raise HorizonExceeded(k, idx.mu)


def query_walk_count(idx: WalkIndex, u: int, v: int, k: int) -> int:
    """``(A^k)_{u,v} mod p`` for ``1 <= k <= mu``."""
    _check_pair(idx, u, v)
    _check_length(idx, k)
    field = idx.field
    total = 0
    for strip, _, segment, degree in idx.segments(v):
        total += field.dot(strip[u, k - 1:k - 1 + degree], segment)
    return total % idx.p


def query_prefix_count(idx: WalkIndex, u: int, v: int, k: int) -> int:
    """``sum_{t<=k} (A^t)_{u,v} mod p``: prefix window at ``k`` minus the window at 0."""
    _check_pair(idx, u, v)
    _check_length(idx, k)
    field = idx.field
    p = idx.p
    total = 0
    for _, prefix, segment, degree in idx.segments(v):
        row = prefix[u]
        balance = np.concatenate([[0], row[:degree - 1]])
        total += field.dot((row[k - 1:k - 1 + degree] - balance) % p, segment)
    return total % p


def query_all_lengths(idx: WalkIndex, u: int, v: int) -> WalkCountVector:
    """``w_1..w_mu`` by one Hankel product per strip."""
    _check_pair(idx, u, v)
    field = idx.field
    mu = idx.mu
    counts = np.zeros(mu, dtype=np.int64)
    for strip, _, segment, degree in idx.segments(v):
        spec = HankelSpec(strip[u, :degree + mu - 1], rows=mu, cols=degree, field=field)
        counts = (counts + hankel_matvec(spec, segment)) % idx.p
    return WalkCountVector(u=u, v=v, counts=tuple(int(c) for c in counts), p=idx.p)


def fallback_power_row(g: Graph, u: int, K: int, field: PrimeField) -> np.ndarray:
    """Rows ``u`` of ``A^1..A^K`` as a ``K x n`` array, by iterated vector-matrix products."""
    g.check_vertex(u)
    adjacency = g.adjacency
    rows = np.zeros((K, g.n), dtype=np.int64)
    current = adjacency[u].copy()
    for k in range(K):
        if k:
            current = field.matmul(current, adjacency)
        rows[k] = current
    return rows


def distance(
    idx: WalkIndex,
    u: int,
    v: int,
    method: Literal["binary", "scan"] = "binary",
    fallback: bool = False,
) -> Distance:
    """Shortest walk length from ``u`` to ``v``.

    ``binary`` searches on ``prefix_count != 0``; ``scan`` takes the first
    nonzero entry of the all-lengths vector. Both read a count divisible by
    ``p`` as zero. With ``fallback`` a beyond-horizon pair is resolved by
    scanning power rows up to ``n``.
    """
    _check_pair(idx, u, v)
    if u == v:
        return Distance.dist(0)
    if v not in bfs_reachability(idx.graph, u):
        return Distance.unreachable()

    if method == "scan":
        counts = query_all_lengths(idx, u, v).counts
        found = next((k for k, c in enumerate(counts, start=1) if c), None)
    elif method == "binary":
        found = None
        if query_prefix_count(idx, u, v, idx.mu):
            lo, hi = 1, idx.mu
            while lo < hi:
                mid = (lo + hi) // 2
                if query_prefix_count(idx, u, v, mid):
                    hi = mid
                else:
                    lo = mid + 1
            found = lo
    else:
        raise ValueError(f"Unknown distance method: {method}")

    if found is not None:
        return Distance.dist(found)
    if not fallback:
        return Distance.beyond_horizon()

    rows = fallback_power_row(idx.graph, u, idx.n, idx.field)
    for k in range(idx.mu + 1, idx.n + 1):
        if rows[k - 1, v]:
            return Distance.dist(k, via_fallback=True)
    return Distance.beyond_horizon()


def _crt_primes(bound: int) -> List[int]:
    """NTT-friendly primes first, then primes below them, until the product exceeds ``bound``."""
    chosen: List[int] = []
    candidates = list(NTT_PRIMES)
    while prod(chosen) <= bound:
        if candidates:
            chosen.append(candidates.pop())
        else:
            chosen.append(int(prevprime(min(chosen))))
    return chosen


def crt_exact_counts(
    g: Graph,
    u: int,
    v: int,
    primes: Optional[Sequence[int]] = None,
    bound: Optional[int] = None,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> WalkCountVector:
    """Exact walk counts ``w_1..w_mu'`` by Chinese remaindering over several primes.

    Without ``primes``, primes are drawn until their product exceeds ``bound``
    (default ``n^mu``). Raises ``BoundTooSmall`` when the reconstructed prefix
    counts do not satisfy ``P_k = P_{k-1} + w_k`` over the integers.
    """
    g.check_vertex(u)
    g.check_vertex(v)

    indexes = {}

    def index_for(q: int) -> WalkIndex:
        if q not in indexes:
            field = PrimeField(q)
            form = frobenius_decompose(g.adjacency_matrix(field), seed, retries)
            indexes[q] = build_index(form, g)
        return indexes[q]

    if primes:
        chosen = [int(q) for q in primes]
        if len(set(chosen)) != len(chosen):
            raise ConfigError(f"CRT primes must be distinct, got {chosen}")
        if bound is not None and prod(chosen) <= bound:
            raise BoundTooSmall(f"Product of primes {chosen} does not exceed the bound {bound}")
    else:
        first = index_for(NTT_PRIMES[-1])
        target = bound if bound is not None else g.n ** first.mu
        chosen = _crt_primes(target)

    vectors = [query_all_lengths(index_for(q), u, v) for q in chosen]
    horizon = min(len(vec) for vec in vectors)

    walk_residues = [[vec.counts[k] for vec in vectors] for k in range(horizon)]
    prefix_residues = [
        [query_prefix_count(index_for(q), u, v, k + 1) for q in chosen]
        for k in range(horizon)
    ]

    counts: List[int] = []
    previous = 0
    for k in range(horizon):
        w = int(gf_crt(walk_residues[k], chosen, ZZ))
        prefix = int(gf_crt(prefix_residues[k], chosen, ZZ))
        if prefix != previous + w:
            logger.warning(f"CRT reconstruction inconsistent at length {k + 1} with primes {chosen}")
            raise BoundTooSmall(
                f"Reconstructed prefix count at length {k + 1} is inconsistent; "
                f"the product of {len(chosen)} primes is too small"
            )
        counts.append(w)
        previous = prefix

    return WalkCountVector(
        u=u,
        v=v,
        counts=tuple(counts),
        p=chosen[0],
        exactness="exact_crt",
        primes=tuple(chosen),
    )


__all__ = [
    "WalkIndex",
    "build_index",
    "query_walk_count",
    "query_prefix_count",
    "query_all_lengths",
    "fallback_power_row",
    "distance",
    "crt_exact_counts",
]
