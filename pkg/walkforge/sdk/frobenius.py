"""Frobenius normal form ``A = U F U^{-1}`` over a prime field.

The decomposition is the randomized cyclic-vector construction: pick a vector
whose Krylov chain realizes the minimal polynomial of the current operator,
split that cyclic subspace off against an invariant complement cut out by a
dual Krylov chain, and recurse on the complement. Each split produces a block
whose polynomial is divisible by every later one, so the blocks are reversed
at the end to get the ascending divisibility chain. Every result is checked
with :func:`verify_form`; a failed attempt is retried with a fresh stream.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from loguru import logger

from . import polynomial
from .config import DEFAULT_RETRIES
from .exceptions import ContractError, DecompositionFailure, DimensionMismatch, Singular
from .field import PrimeField
from .matrix import DenseMatrix, mat_inverse, mat_mul, nullspace, row_reduce

_DUAL_ATTEMPTS = 3


@dataclass(frozen=True)
class CompanionBlock:
    """Companion block of ``x^r + c_{r-1}x^{r-1} + ... + c_0``; ``poly`` holds ``c_0..c_{r-1}``."""

    poly: Tuple[int, ...]
    field: PrimeField

    def __post_init__(self):
        if not self.poly:
            raise ContractError("Companion block needs degree at least 1")
        object.__setattr__(self, "poly", tuple(int(c) % self.field.p for c in self.poly))

    @property
    def degree(self) -> int:
        return len(self.poly)

    def matrix(self) -> DenseMatrix:
        return DenseMatrix.companion(self.field, self.poly)

    def polynomial(self) -> polynomial.Poly:
        return polynomial.from_block(self.poly, self.field.p)

    def window(self, max_power: int) -> np.ndarray:
        return companion_power_window(self, max_power)


@dataclass(frozen=True, eq=False)
class FrobeniusForm:
    u: DenseMatrix
    u_inv: DenseMatrix
    blocks: Tuple[CompanionBlock, ...]

    @property
    def field(self) -> PrimeField:
        return self.u.field

    @property
    def n(self) -> int:
        return self.u.rows

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(b.degree for b in self.blocks)

    @property
    def mu_min(self) -> int:
        return self.blocks[0].degree

    @property
    def minpoly_deg(self) -> int:
        return self.blocks[-1].degree

    @property
    def block_offsets(self) -> Tuple[int, ...]:
        offsets = np.concatenate([[0], np.cumsum(self.degrees)[:-1]])
        return tuple(int(o) for o in offsets)

    def frobenius_matrix(self) -> DenseMatrix:
        return DenseMatrix.block_diagonal(self.field, [b.matrix() for b in self.blocks])

    def invariant_factors(self) -> List[polynomial.Poly]:
        """Block polynomials, high-first, in divisibility order."""
        return [b.polynomial() for b in self.blocks]

    def describe_factors(self) -> List[str]:
        return [polynomial.format_poly(f) for f in self.invariant_factors()]

    def reconstruct(self) -> DenseMatrix:
        return mat_mul(mat_mul(self.u, self.frobenius_matrix()), self.u_inv)


def companion_power_window(block: CompanionBlock, max_power: int) -> np.ndarray:
    """Columns ``v_1..v_{max_power + r - 1}`` with ``v_t = C^t e_1``.

    Column ``t - 1`` of the result is ``v_t``; the columns of ``C^k`` are
    ``v_k..v_{k+r-1}`` for every ``k <= max_power``.
    """
    if max_power < 1:
        raise ContractError(f"max_power must be at least 1, got {max_power}")
    p = block.field.p
    r = block.degree
    neg_c = (-np.array(block.poly, dtype=np.int64)) % p
    out = np.zeros((r, max_power + r - 1), dtype=np.int64)
    current = np.zeros(r, dtype=np.int64)
    current[0] = 1
    for t in range(out.shape[1]):
        carry = int(current[-1])
        shifted = np.empty_like(current)
        shifted[0] = 0
        shifted[1:] = current[:-1]
        current = (shifted + carry * neg_c) % p
        out[:, t] = current
    return out


def verify_form(a: DenseMatrix, form: FrobeniusForm) -> bool:
    """Exact check of reconstruction, degree sum and the divisibility chain."""
    if not a.is_square or form.u.rows != a.rows or form.u_inv.rows != a.rows:
        return False
    if not form.blocks or sum(form.degrees) != a.rows:
        return False
    p = a.field.p
    factors = form.invariant_factors()
    if any(not polynomial.divides(f, g, p) for f, g in zip(factors, factors[1:])):
        return False
    try:
        return form.reconstruct() == a
    except DimensionMismatch:
        return False


def _krylov(field: PrimeField, m: np.ndarray, v: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Krylov basis of ``v`` under ``m`` and the coefficients of its annihilator."""
    size = m.shape[0]
    columns = [v]
    limit = 2
    while True:
        while len(columns) < min(limit, size + 1):
            columns.append(field.matmul(m, columns[-1]))
        krylov = np.stack(columns, axis=1)
        reduced, pivots = row_reduce(field, krylov)
        d = len(pivots)
        if d < krylov.shape[1]:
            coeffs = (-reduced[:d, d]) % field.p
            return krylov[:, :d], [int(c) for c in coeffs]
        limit *= 2


def _dual_rows(field: PrimeField, m: np.ndarray, w: np.ndarray, d: int) -> np.ndarray:
    rows = [w]
    for _ in range(d - 1):
        rows.append(field.matmul(rows[-1], m))
    return np.stack(rows, axis=0)


def _split(field: PrimeField, m: np.ndarray, rng: np.random.Generator):
    """One cyclic split of ``m``: (basis, coeffs, complement basis, restricted operator)."""
    p = field.p
    size = m.shape[0]

    start = np.zeros(size, dtype=np.int64)
    start[0] = 1
    basis, coeffs = _krylov(field, m, start)
    if len(coeffs) < size:
        basis, coeffs = _krylov(field, m, rng.integers(0, p, size=size, dtype=np.int64))
    d = len(coeffs)
    if d == 0:
        raise Singular("Sampled the zero vector as a cyclic vector")
    if d == size:
        return basis, coeffs, None, None

    for _ in range(_DUAL_ATTEMPTS):
        dual = _dual_rows(field, m, rng.integers(0, p, size=size, dtype=np.int64), d)
        hankel = field.matmul(dual, basis)
        if len(row_reduce(field, hankel)[1]) == d:
            break
    else:
        raise Singular(f"No dual vector separates the cyclic subspace of dimension {d}")

    complement, free = nullspace(field, dual)
    image = field.matmul(m, complement)
    restricted = image[free, :]
    if not np.array_equal(image, field.matmul(complement, restricted)):
        raise Singular("Cyclic vector did not realize the minimal polynomial")
    return basis, coeffs, complement, restricted


def _decompose_once(a: DenseMatrix, rng: np.random.Generator) -> FrobeniusForm:
    field = a.field
    n = a.rows
    q = np.eye(n, dtype=np.int64)
    m = np.array(a.data, dtype=np.int64)
    stages = []
    while m.shape[0] > 0:
        basis, coeffs, complement, restricted = _split(field, m, rng)
        stages.append((coeffs, field.matmul(q, basis)))
        if complement is None:
            break
        q = field.matmul(q, complement)
        m = restricted

    stages.reverse()
    blocks = tuple(CompanionBlock(tuple(coeffs), field) for coeffs, _ in stages)
    u = DenseMatrix(np.concatenate([cols for _, cols in stages], axis=1), field)
    return FrobeniusForm(u=u, u_inv=mat_inverse(u), blocks=blocks)


def frobenius_decompose(a: DenseMatrix, rng_seed: int = 0, retries: int = DEFAULT_RETRIES) -> FrobeniusForm:
    """Frobenius normal form of ``a``, deterministic for a given seed.

    Raises:
        DecompositionFailure: every attempt in the retry budget failed.
    """
    if not a.is_square:
        raise DimensionMismatch(f"Frobenius form needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows == 0:
        raise DimensionMismatch("Frobenius form of an empty matrix is undefined")

    for attempt in range(retries):
        rng = np.random.default_rng([abs(int(rng_seed)), attempt])
        try:
            form = _decompose_once(a, rng)
        except Singular as e:
            logger.debug(f"Decomposition attempt {attempt + 1}/{retries} failed: {e}")
            continue
        if verify_form(a, form):
            logger.debug(f"Decomposed n={a.rows} into degrees {list(form.degrees)} (attempt {attempt + 1})")
            return form
        logger.debug(f"Decomposition attempt {attempt + 1}/{retries} failed verification")

    raise DecompositionFailure(
        f"Frobenius decomposition failed after {retries} attempts (p={a.field.p}, seed={rng_seed})"
    )


__all__ = [
    "CompanionBlock",
    "FrobeniusForm",
    "frobenius_decompose",
    "verify_form",
    "companion_power_window",
]
