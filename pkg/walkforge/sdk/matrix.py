"""Dense matrices over a prime field."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DimensionMismatch, Singular
from .field import PrimeField

ROW_BLOCK = 256


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Row-major matrix of canonical residues. The backing array is read-only."""

    data: np.ndarray
    field: PrimeField

    def __post_init__(self):
        data = self.field.vector(np.asarray(self.data))
        if data.ndim != 2:
            raise DimensionMismatch(f"Matrix data must be 2-D, got shape {data.shape}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    # Constructors

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "DenseMatrix":
        return cls(np.eye(n, dtype=np.int64), field)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]]) -> "DenseMatrix":
        return cls(np.array(rows, dtype=object).reshape(len(rows), -1) if rows else
                   np.zeros((0, 0), dtype=np.int64), field)

    @classmethod
    def companion(cls, field: PrimeField, coeffs: Sequence[int]) -> "DenseMatrix":
        """Companion matrix of x^r + c_{r-1}x^{r-1} + ... + c_0 given c_0..c_{r-1}."""
        r = len(coeffs)
        data = np.zeros((r, r), dtype=np.int64)
        if r > 1:
            data[np.arange(1, r), np.arange(r - 1)] = 1
        data[:, r - 1] = -field.vector(list(coeffs)) % field.p
        return cls(data, field)

    @classmethod
    def block_diagonal(cls, field: PrimeField, blocks: Sequence["DenseMatrix"]) -> "DenseMatrix":
        n = sum(b.rows for b in blocks)
        data = np.zeros((n, n), dtype=np.int64)
        offset = 0
        for block in blocks:
            data[offset:offset + block.rows, offset:offset + block.cols] = block.data
            offset += block.rows
        return cls(data, field)

    # Shape and access

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        return self.data[index]

    def to_rows(self) -> List[List[int]]:
        return self.data.tolist()

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.data.T, self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.field.p == other.field.p and np.array_equal(self.data, other.data)

    __hash__ = None

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols}, p={self.field.p})"

    # Algebra

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "DenseMatrix":
        return mat_pow(self, k)

    def inverse(self) -> "DenseMatrix":
        return mat_inverse(self)

    def rank(self) -> int:
        return len(row_reduce(self.field, self.data)[1])

    def nullspace(self) -> "DenseMatrix":
        return DenseMatrix(nullspace(self.field, self.data)[0], self.field)


def _check_same_field(a: DenseMatrix, b: DenseMatrix) -> None:
    if a.field.p != b.field.p:
        raise DimensionMismatch(f"Matrices over different fields: {a.field.p} vs {b.field.p}")


def mat_mul(a: DenseMatrix, b: DenseMatrix, strassen_threshold: Optional[int] = None) -> DenseMatrix:
    """Exact product mod p."""
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    field = a.field
    if strassen_threshold and a.is_square and b.is_square and a.rows > strassen_threshold:
        return DenseMatrix(_strassen(field, a.data, b.data, strassen_threshold), field)

    out = np.empty((a.rows, b.cols), dtype=np.int64)
    for start in range(0, a.rows, ROW_BLOCK):
        block = slice(start, start + ROW_BLOCK)
        out[block] = field.matmul(a.data[block], b.data)
    return DenseMatrix(out, field)


def _strassen(field: PrimeField, a: np.ndarray, b: np.ndarray, threshold: int) -> np.ndarray:
    n = a.shape[0]
    if n <= threshold:
        return field.matmul(a, b)
    if n % 2:
        a = np.pad(a, ((0, 1), (0, 1)))
        b = np.pad(b, ((0, 1), (0, 1)))
        return _strassen(field, a, b, threshold)[:n, :n]

    p = field.p
    h = n // 2
    a11, a12, a21, a22 = a[:h, :h], a[:h, h:], a[h:, :h], a[h:, h:]
    b11, b12, b21, b22 = b[:h, :h], b[:h, h:], b[h:, :h], b[h:, h:]

    def mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return _strassen(field, x % p, y % p, threshold)

    m1 = mul(a11 + a22, b11 + b22)
    m2 = mul(a21 + a22, b11)
    m3 = mul(a11, b12 - b22)
    m4 = mul(a22, b21 - b11)
    m5 = mul(a11 + a12, b22)
    m6 = mul(a21 - a11, b11 + b12)
    m7 = mul(a12 - a22, b21 + b22)

    out = np.empty((n, n), dtype=np.int64)
    out[:h, :h] = (m1 + m4 - m5 + m7) % p
    out[:h, h:] = (m3 + m5) % p
    out[h:, :h] = (m2 + m4) % p
    out[h:, h:] = (m1 - m2 + m3 + m6) % p
    return out


def mat_inverse(a: DenseMatrix) -> DenseMatrix:
    """Gauss-Jordan inverse with full pivoting over Z_p."""
    if not a.is_square:
        raise DimensionMismatch(f"Cannot invert a {a.rows}x{a.cols} matrix")
    field = a.field
    p = field.p
    n = a.rows
    aug = np.concatenate([a.data, np.eye(n, dtype=np.int64)], axis=1)
    col_order = np.arange(n)

    for k in range(n):
        candidates = np.argwhere(aug[k:, k:n] != 0)
        if candidates.size == 0:
            raise Singular(f"Matrix is singular (rank {k} < {n})")
        r, c = candidates[0] + k
        if r != k:
            aug[[k, r]] = aug[[r, k]]
        if c != k:
            aug[:, [k, c]] = aug[:, [c, k]]
            col_order[[k, c]] = col_order[[c, k]]

        aug[k] = aug[k] * pow(int(aug[k, k]), p - 2, p) % p
        column = aug[:, k].copy()
        column[k] = 0
        rows = np.nonzero(column)[0]
        if rows.size:
            aug[rows] = (aug[rows] - np.outer(column[rows], aug[k])) % p

    inverse = np.empty((n, n), dtype=np.int64)
    inverse[col_order] = aug[:, n:]
    return DenseMatrix(inverse, field)


def mat_pow(a: DenseMatrix, k: int, strassen_threshold: Optional[int] = None) -> DenseMatrix:
    """A^k by repeated squaring; A^0 is the identity."""
    if not a.is_square:
        raise DimensionMismatch(f"Cannot power a {a.rows}x{a.cols} matrix")
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}")
    result = DenseMatrix.identity(a.field, a.rows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base, strassen_threshold)
        k >>= 1
        if k:
            base = mat_mul(base, base, strassen_threshold)
    return result


def row_reduce(field: PrimeField, m: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns."""
    p = field.p
    a = field.vector(np.array(m, dtype=np.int64, copy=True))
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + nonzero[0]
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        column = a[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(field: PrimeField, m: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Right null space basis as columns, plus the free coordinates.

    The basis restricted to the free coordinates is the identity.
    """
    reduced, pivots = row_reduce(field, m)
    cols = reduced.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    if free:
        basis[free, np.arange(len(free))] = 1
        if pivots:
            basis[pivots, :] = (-reduced[: len(pivots)][:, free]) % field.p
    return basis, free


__all__ = ["DenseMatrix", "mat_mul", "mat_inverse", "mat_pow", "row_reduce", "nullspace"]
