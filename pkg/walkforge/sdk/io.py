"""Edge-list ingestion, walk index persistence and APAW output writers."""

import json
import struct
from pathlib import Path
from typing import IO, Iterable, Set, Tuple, Union

import numpy as np
from loguru import logger

from .exceptions import EdgeListParseError, IndexFormatError
from .field import PrimeField
from .graph import Edge, Graph
from .matrix import DenseMatrix
from .utils import fnv1a64
from .walk_oracle import WalkIndex

PathLike = Union[str, Path]

INDEX_MAGIC = b"WFIX"
INDEX_VERSION = 1
_HEADER = struct.Struct("<4sHQII")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_CELL = np.dtype("<u8")


# Edge lists

def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse ``n m`` followed by ``m`` arcs ``u v``; ``#`` lines and blank lines are skipped."""
    header = None
    edges: Set[Edge] = set()
    expected = 0
    last_line = 0
    for line_number, raw in enumerate(lines, start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected two integers, got {len(tokens)} tokens", line_number)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"not an integer pair: {line!r}", line_number) from None

        if header is None:
            if a < 1 or b < 0:
                raise EdgeListParseError(f"invalid header n={a} m={b}", line_number)
            header, expected = a, b
            continue
        if len(edges) == expected:
            raise EdgeListParseError(f"more arcs than the {expected} declared", line_number)
        if not (0 <= a < header and 0 <= b < header):
            raise EdgeListParseError(f"arc ({a}, {b}) outside 0..{header - 1}", line_number)
        if (a, b) in edges:
            raise EdgeListParseError(f"duplicate arc ({a}, {b})", line_number)
        edges.add((a, b))

    if header is None:
        raise EdgeListParseError("missing 'n m' header", last_line)
    if len(edges) != expected:
        raise EdgeListParseError(f"declared {expected} arcs but found {len(edges)}", last_line)
    return Graph(header, frozenset(edges))


def read_edge_list(path: PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        graph = parse_edge_list(f)
    logger.debug(f"Read graph n={graph.n} m={graph.m} from {path}")
    return graph


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"] + [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")


# Index files

def index_to_bytes(idx: WalkIndex) -> bytes:
    parts = [
        _HEADER.pack(INDEX_MAGIC, INDEX_VERSION, idx.p, idx.n, len(idx.degrees)),
        b"".join(_U32.pack(d) for d in idx.degrees),
    ]
    parts.extend(np.ascontiguousarray(s, dtype=_CELL).tobytes() for s in idx.strips)
    parts.extend(np.ascontiguousarray(s, dtype=_CELL).tobytes() for s in idx.prefix_strips)
    parts.append(np.ascontiguousarray(idx.u_inv.data, dtype=_CELL).tobytes())
    parts.append(idx.graph.packed_adjacency())
    body = b"".join(parts)
    return body + _U64.pack(fnv1a64(body))


def write_index(idx: WalkIndex, path: PathLike) -> None:
    data = index_to_bytes(idx)
    Path(path).write_bytes(data)
    logger.debug(f"Wrote index ({len(data)} bytes) to {path}")


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, size: int, what: str) -> bytes:
        if self.pos + size > len(self.data):
            raise IndexFormatError(f"Index truncated while reading {what}")
        chunk = self.data[self.pos:self.pos + size]
        self.pos += size
        return chunk

    def matrix(self, rows: int, cols: int, what: str) -> np.ndarray:
        raw = self.take(rows * cols * _CELL.itemsize, what)
        return np.frombuffer(raw, dtype=_CELL).astype(np.int64).reshape(rows, cols)


def index_from_bytes(data: bytes) -> WalkIndex:
    if len(data) < _HEADER.size + _U64.size:
        raise IndexFormatError("Index file too short")
    body, trailer = data[:-_U64.size], data[-_U64.size:]
    if INDEX_MAGIC != body[:4]:
        raise IndexFormatError("Not a walk index (bad magic)")
    if fnv1a64(body) != _U64.unpack(trailer)[0]:
        raise IndexFormatError("Index checksum mismatch")

    reader = _Reader(body)
    _, version, p, n, blocks = _HEADER.unpack(reader.take(_HEADER.size, "header"))
    if version != INDEX_VERSION:
        raise IndexFormatError(f"Unsupported index version {version} (expected {INDEX_VERSION})")
    degrees = tuple(_U32.unpack(reader.take(_U32.size, "block degrees"))[0] for _ in range(blocks))
    if not degrees or sum(degrees) != n:
        raise IndexFormatError(f"Block degrees {list(degrees)} do not sum to n={n}")

    field = PrimeField(p)
    mu = degrees[0]
    strips = tuple(reader.matrix(n, d + mu, "strips") for d in degrees)
    prefixes = tuple(reader.matrix(n, d + mu, "prefix strips") for d in degrees)
    u_inv = reader.matrix(n, n, "inverse transform")
    packed = np.frombuffer(reader.take((n * n + 7) // 8, "adjacency"), dtype=np.uint8)
    if reader.pos != len(body):
        raise IndexFormatError(f"{len(body) - reader.pos} trailing bytes after adjacency")
    adjacency = np.unpackbits(packed)[: n * n].reshape(n, n).astype(np.int64)

    for array in strips + prefixes:
        array.setflags(write=False)
    return WalkIndex(
        field=field,
        mu=mu,
        degrees=degrees,
        strips=strips,
        prefix_strips=prefixes,
        u_inv=DenseMatrix(u_inv, field),
        graph=Graph.from_adjacency(adjacency),
    )


def read_index(path: PathLike) -> WalkIndex:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise IndexFormatError(f"Cannot read index {path}: {e}") from e
    return index_from_bytes(data)


def looks_like_index(path: PathLike) -> bool:
    try:
        with open(path, "rb") as f:
            return f.read(len(INDEX_MAGIC)) == INDEX_MAGIC
    except OSError:
        return False


# APAW output

def write_apaw_jsonl(records: Iterable[Tuple[int, int, Tuple[int, ...]]], out: IO[str], p: int) -> int:
    """One JSON object per ordered pair; returns the number of records written."""
    written = 0
    for u, v, counts in records:
        out.write(json.dumps({"u": u, "v": v, "counts": list(counts), "p": p, "exactness": "mod_p"}) + "\n")
        written += 1
    return written


def write_apaw_per_k(table: np.ndarray, directory: PathLike) -> list:
    """``k_<k>.txt`` per length holding ``A^k mod p`` as whitespace-separated rows."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k in range(table.shape[2]):
        path = directory / f"k_{k + 1}.txt"
        np.savetxt(path, table[:, :, k], fmt="%d")
        paths.append(path)
    return paths


__all__ = [
    "INDEX_MAGIC",
    "INDEX_VERSION",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "write_edge_list",
    "index_to_bytes",
    "index_from_bytes",
    "write_index",
    "read_index",
    "looks_like_index",
    "write_apaw_jsonl",
    "write_apaw_per_k",
]
