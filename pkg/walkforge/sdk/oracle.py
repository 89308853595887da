"""Brute-force reference implementations.

Nothing here shares code with the production query path: walk counts use
big-integer products, cycles use a plain deque BFS, and invariant factors come
from a Smith-form elimination of ``xI - A`` over Z_p[x].
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import polynomial
from .exceptions import SizeGuard
from .graph import Graph
from .matrix import DenseMatrix

MAX_ORACLE_N = 64
MAX_ORACLE_K = 64
MAX_SMITH_N = 32


@dataclass(frozen=True, eq=False)
class ExactWalkTable:
    """``table[k - 1][u, v]`` is the exact number of walks of length ``k``."""

    table: np.ndarray

    @property
    def K(self) -> int:
        return self.table.shape[0]

    def count(self, u: int, v: int, k: int) -> int:
        return int(self.table[k - 1, u, v])

    def counts(self, u: int, v: int) -> List[int]:
        return [int(c) for c in self.table[:, u, v]]

    def prefix(self, u: int, v: int, k: int) -> int:
        return sum(self.counts(u, v)[:k])

    def mod(self, p: int) -> np.ndarray:
        return (self.table % p).astype(np.int64)


def dp_walk_counts(g: Graph, K: int) -> ExactWalkTable:
    if g.n > MAX_ORACLE_N or K > MAX_ORACLE_K:
        raise SizeGuard(f"Oracle limited to n <= {MAX_ORACLE_N} and K <= {MAX_ORACLE_K}, got n={g.n} K={K}")
    adjacency = np.array(g.adjacency.tolist(), dtype=object)
    table = np.empty((K, g.n, g.n), dtype=object)
    power = adjacency
    for k in range(K):
        if k:
            power = power.dot(adjacency)
        table[k] = power
    return ExactWalkTable(table)


def bfs_shortest_cycle(g: Graph, u: int) -> Optional[int]:
    """Length of the shortest cycle through ``u``."""
    successors = [[] for _ in range(g.n)]
    for a, b in g.edges:
        successors[a].append(b)

    dist = {}
    queue = deque()
    for w in successors[u]:
        if w == u:
            return 1
        if w not in dist:
            dist[w] = 1
            queue.append(w)
    while queue:
        x = queue.popleft()
        for y in successors[x]:
            if y == u:
                return dist[x] + 1
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def invariant_factors_bruteforce(a: DenseMatrix) -> List[polynomial.Poly]:
    """Non-unit invariant factors of ``a``, high-first and ascending in divisibility."""
    n = a.rows
    if n > MAX_SMITH_N:
        raise SizeGuard(f"Smith-form oracle limited to n <= {MAX_SMITH_N}, got n={n}")
    p = a.field.p
    m = [
        [polynomial.normalize([1, -int(a.data[i, j])] if i == j else [-int(a.data[i, j])], p) for j in range(n)]
        for i in range(n)
    ]

    for t in range(n):
        while True:
            entries = [(len(m[i][j]), i, j) for i in range(t, n) for j in range(t, n) if m[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            m[t], m[i] = m[i], m[t]
            for row in m:
                row[t], row[j] = row[j], row[t]

            pivot = m[t][t]
            clean = True
            for i in range(t + 1, n):
                if m[i][t]:
                    q, _ = polynomial.divmod_poly(m[i][t], pivot, p)
                    m[i] = [polynomial.sub_mul(x, q, y, p) for x, y in zip(m[i], m[t])]
                    clean = clean and not m[i][t]
            for j in range(t + 1, n):
                if m[t][j]:
                    q, _ = polynomial.divmod_poly(m[t][j], pivot, p)
                    for row in m:
                        row[j] = polynomial.sub_mul(row[j], q, row[t], p)
                    clean = clean and not m[t][j]
            if not clean:
                continue

            stray = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if not polynomial.divides(pivot, m[i][j], p)),
                None,
            )
            if stray is None:
                break
            m[t] = [polynomial.add(x, y, p) for x, y in zip(m[t], m[stray])]

    diagonal = [polynomial.monic(m[i][i], p) for i in range(n)]
    return [f for f in diagonal if polynomial.degree(f) >= 1]


__all__ = [
    "ExactWalkTable",
    "dp_walk_counts",
    "bfs_shortest_cycle",
    "invariant_factors_bruteforce",
    "MAX_ORACLE_N",
    "MAX_ORACLE_K",
    "MAX_SMITH_N",
]
