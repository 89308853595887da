"""Prime-field arithmetic and number-theoretic transform convolution.

Every kernel in the package works on ``numpy.int64`` arrays of canonical
residues in ``[0, p)``. Moduli are capped below 2^31 so the product of two
residues fits in a signed 64-bit word; long dot products are reduced with
a 15-bit split of the right operand (delayed reduction).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence, Union

import numpy as np
from sympy import factorint, isprime, primitive_root

from .config import DEFAULT_PRIME
from .exceptions import ConfigError, ContractError, DimensionMismatch, LengthOverflow, ZeroInverse

MAX_MODULUS = 1 << 31

# NTT-friendly primes c * 2^k + 1 near 2^30
NTT_PRIMES = (
    754974721,   # 45 * 2^24 + 1
    924844033,   # 441 * 2^21 + 1
    985661441,   # 235 * 2^22 + 1
    998244353,   # 119 * 2^23 + 1
    1004535809,  # 479 * 2^21 + 1
    1007681537,  # 961 * 2^20 + 1
    1012924417,  # 483 * 2^21 + 1
)

_SPLIT_BITS = 15
_SPLIT_MASK = (1 << _SPLIT_BITS) - 1
_CHUNK = 1 << 15
_SCHOOLBOOK_CUTOFF = 32

ArrayLike = Union[np.ndarray, Sequence[int]]


@dataclass(frozen=True)
class FieldElem:
    """A canonical residue bound to its field."""

    value: int
    field: "PrimeField"

    def _coerce(self, other: Union["FieldElem", int]) -> int:
        if isinstance(other, FieldElem):
            if other.field.p != self.field.p:
                raise ContractError(f"Operands from different fields: {self.field.p} vs {other.field.p}")
            return other.value
        return int(other) % self.field.p

    def __add__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.field.add(self.value, self._coerce(other))

    def __sub__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.field.sub(self.value, self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElem":
        return self.field.sub(self._coerce(other), self.value)

    def __mul__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.field.mul(self.value, self._coerce(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> "FieldElem":
        return self.field.sub(0, self.value)

    def inverse(self) -> "FieldElem":
        return self.field.inv(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic context for Z_p.

    ``generator`` and ``max_ntt_len`` are derived from ``p`` when left at 0.
    """

    p: int = DEFAULT_PRIME
    generator: int = 0
    max_ntt_len: int = 0

    def __post_init__(self):
        p = int(self.p)
        if not 2 <= p < MAX_MODULUS:
            raise ConfigError(f"Modulus must lie in [2, 2^31), got {p}")
        if not isprime(p):
            raise ConfigError(f"Modulus {p} is not prime")

        order = p - 1
        generator = int(self.generator) if self.generator else int(primitive_root(p))
        for q in factorint(order):
            if pow(generator, order // q, p) == 1:
                raise ConfigError(f"{generator} is not a primitive root modulo {p}")

        two_adic = order & -order if order else 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "max_ntt_len", two_adic)

    @classmethod
    def sample(cls, rng: np.random.Generator, exclude: Iterable[int] = ()) -> "PrimeField":
        """Pick a random NTT-friendly prime from the built-in list."""
        excluded = set(exclude)
        candidates = [q for q in NTT_PRIMES if q not in excluded]
        if not candidates:
            raise ConfigError("No unused NTT-friendly primes left to sample")
        return cls(int(rng.choice(candidates)))

    # Scalars

    def elem(self, value: int) -> FieldElem:
        return FieldElem(int(value) % self.p, self)

    def arith(self, a: int, b: int, op: Literal["add", "sub", "mul"]) -> FieldElem:
        a, b = int(a), int(b)
        if op == "add":
            return self.elem(a + b)
        if op == "sub":
            return self.elem(a - b)
        if op == "mul":
            return self.elem(a * b)
        raise ValueError(f"Unknown field operation: {op}")

    def add(self, a: int, b: int) -> FieldElem:
        return self.arith(a, b, "add")

    def sub(self, a: int, b: int) -> FieldElem:
        return self.arith(a, b, "sub")

    def mul(self, a: int, b: int) -> FieldElem:
        return self.arith(a, b, "mul")

    def inv(self, a: Union[int, FieldElem]) -> FieldElem:
        value = int(a) % self.p
        if value == 0:
            raise ZeroInverse("Zero has no multiplicative inverse")
        return self.elem(pow(value, self.p - 2, self.p))

    # Vectors

    def vector(self, values: ArrayLike) -> np.ndarray:
        """Canonical int64 residues for any integer sequence, big ints included."""
        if isinstance(values, np.ndarray) and (values.dtype.kind in "bi" or
                                               (values.dtype.kind == "u" and values.dtype.itemsize < 8)):
            return values.astype(np.int64) % self.p
        return np.array([int(v) % self.p for v in np.ravel(np.asarray(values, dtype=object))],
                        dtype=np.int64).reshape(np.shape(values))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact ``a @ b mod p`` with delayed reduction."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        inner = a.shape[-1]
        if inner != b.shape[0]:
            raise DimensionMismatch(f"Cannot multiply shapes {a.shape} and {b.shape}")
        p = self.p
        if inner * (p - 1) ** 2 < (1 << 63):
            return (a @ b) % p

        lo = b & _SPLIT_MASK
        hi = b >> _SPLIT_BITS
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        for start in range(0, inner, _CHUNK):
            part = slice(start, start + _CHUNK)
            low = (a[..., part] @ lo[part]) % p
            high = (a[..., part] @ hi[part]) % p
            out = (out + low + high * (1 << _SPLIT_BITS)) % p
        return out

    def dot(self, a: np.ndarray, b: np.ndarray) -> int:
        return int(self.matmul(a, b))

    # Number-theoretic transform

    def ntt_forward(self, values: ArrayLike) -> np.ndarray:
        return self._transform(self.vector(values), invert=False)

    def ntt_inverse(self, values: ArrayLike) -> np.ndarray:
        size = len(values)
        out = self._transform(self.vector(values), invert=True)
        return out * pow(size, self.p - 2, self.p) % self.p

    def ntt_convolve(self, x: ArrayLike, y: ArrayLike) -> np.ndarray:
        """Cyclic-free convolution via NTT; raises ``LengthOverflow`` when it does not fit."""
        x = self.vector(x)
        y = self.vector(y)
        if x.size == 0 or y.size == 0:
            return np.zeros(0, dtype=np.int64)
        out_len = x.size + y.size - 1
        size = 1 << (out_len - 1).bit_length()
        if size > self.max_ntt_len:
            raise LengthOverflow(f"Transform length {size} exceeds {self.max_ntt_len} for p={self.p}")
        fx = self._transform(np.pad(x, (0, size - x.size)), invert=False)
        fy = self._transform(np.pad(y, (0, size - y.size)), invert=False)
        return self.ntt_inverse(fx * fy % self.p)[:out_len]

    def schoolbook_convolve(self, x: ArrayLike, y: ArrayLike) -> np.ndarray:
        x = self.vector(x)
        y = self.vector(y)
        if x.size == 0 or y.size == 0:
            return np.zeros(0, dtype=np.int64)
        short, long_ = (x, y) if x.size <= y.size else (y, x)
        out = np.zeros(x.size + y.size - 1, dtype=np.int64)
        for i, c in enumerate(short):
            if c:
                window = slice(i, i + long_.size)
                out[window] = (out[window] + int(c) * long_) % self.p
        return out

    def convolve(self, x: ArrayLike, y: ArrayLike) -> np.ndarray:
        """Convolution that never fails: NTT when it fits, schoolbook otherwise."""
        if min(len(x), len(y)) <= _SCHOOLBOOK_CUTOFF:
            return self.schoolbook_convolve(x, y)
        try:
            return self.ntt_convolve(x, y)
        except LengthOverflow:
            return self.schoolbook_convolve(x, y)

    def _transform(self, a: np.ndarray, invert: bool) -> np.ndarray:
        size = a.size
        if size & (size - 1):
            raise LengthOverflow(f"Transform length {size} is not a power of two")
        if size > self.max_ntt_len:
            raise LengthOverflow(f"Transform length {size} exceeds {self.max_ntt_len} for p={self.p}")
        p = self.p
        a = a[_bit_reverse(size)]
        length = 2
        while length <= size:
            half = length // 2
            twiddles = self._twiddles(length, invert)
            blocks = a.reshape(-1, length)
            lo = blocks[:, :half].copy()
            hi = blocks[:, half:] * twiddles % p
            blocks[:, :half] = (lo + hi) % p
            blocks[:, half:] = (lo - hi) % p
            length <<= 1
        return a

    @lru_cache(maxsize=64)
    def _twiddles(self, length: int, invert: bool) -> np.ndarray:
        root = pow(self.generator, (self.p - 1) // length, self.p)
        if invert:
            root = pow(root, self.p - 2, self.p)
        powers = np.ones(1, dtype=np.int64)
        step = root
        while powers.size < length // 2:
            powers = np.concatenate([powers, powers * step % self.p])
            step = step * step % self.p
        return powers[: length // 2]


@lru_cache(maxsize=64)
def _bit_reverse(size: int) -> np.ndarray:
    order = np.zeros(1, dtype=np.int64)
    while order.size < size:
        order = np.concatenate([order * 2, order * 2 + 1])
    return order


__all__ = ["PrimeField", "FieldElem", "NTT_PRIMES", "MAX_MODULUS"]
