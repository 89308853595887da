"""Directed unweighted graphs and breadth-first reachability."""

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
import numpy as np

from .exceptions import ContractError, VertexOutOfRange
from .field import PrimeField
from .matrix import DenseMatrix
from .utils import short_hash

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple digraph on vertices ``0..n-1``; self-loops allowed."""

    n: int
    edges: FrozenSet[Edge] = dc_field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ContractError(f"Graph needs at least one vertex, got n={self.n}")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"Arc ({u}, {v}) outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(edges))

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray) -> "Graph":
        adjacency = np.asarray(adjacency)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ContractError(f"Adjacency must be square, got shape {adjacency.shape}")
        if not np.isin(adjacency, (0, 1)).all():
            raise ContractError("Adjacency entries must be 0 or 1")
        rows, cols = np.nonzero(adjacency)
        return cls(adjacency.shape[0], frozenset(zip(rows.tolist(), cols.tolist())))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            rows, cols = zip(*self.edges)
            out[list(rows), list(cols)] = 1
        out.setflags(write=False)
        return out

    def adjacency_matrix(self, field: PrimeField) -> DenseMatrix:
        return DenseMatrix(self.adjacency, field)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def successors(self, u: int) -> List[int]:
        return np.nonzero(self.adjacency[u])[0].tolist()

    def check_vertex(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise VertexOutOfRange(f"Vertex {u} outside 0..{self.n - 1}")
        return u

    @cached_property
    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def packed_adjacency(self) -> bytes:
        return np.packbits(self.adjacency.astype(np.uint8).ravel()).tobytes()

    def hash(self) -> str:
        return short_hash(self.packed_adjacency())

    def is_strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.digraph)


def bfs_reachability(g: Graph, u: int) -> Dict[int, int]:
    """Breadth-first distances from ``u`` to every reachable vertex (``u`` itself at 0)."""
    g.check_vertex(u)
    return dict(nx.single_source_shortest_path_length(g.digraph, u))


def random_digraph(n: int, density: float, seed: int = 0, loops: bool = False) -> Graph:
    """Each ordered pair becomes an arc independently with probability ``density``."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    if not loops:
        np.fill_diagonal(mask, False)
    return Graph.from_adjacency(mask.astype(np.int64))


def random_strongly_connected(n: int, density: float, seed: int = 0) -> Graph:
    """A random Hamiltonian cycle overlaid with random arcs."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    np.fill_diagonal(mask, False)
    if n > 1:
        order = rng.permutation(n)
        mask[order, np.roll(order, -1)] = True
    return Graph.from_adjacency(mask.astype(np.int64))


__all__ = ["Graph", "Edge", "bfs_reachability", "random_digraph", "random_strongly_connected"]
