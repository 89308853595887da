"""Hankel matrix-vector products by a single convolution."""

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .exceptions import DimensionMismatch, LengthOverflow
from .field import PrimeField

# Below this many columns the dense product beats a transform
DENSE_CUTOFF = 32


@dataclass(frozen=True, eq=False)
class HankelSpec:
    """Implicit ``rows x cols`` Hankel matrix with entry ``(i, j) = seq[i + j]``."""

    seq: np.ndarray
    rows: int
    cols: int
    field: PrimeField

    def __post_init__(self):
        seq = self.field.vector(self.seq)
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"Hankel shape must be positive, got {self.rows}x{self.cols}")
        if seq.size != self.rows + self.cols - 1:
            raise DimensionMismatch(
                f"Hankel {self.rows}x{self.cols} needs {self.rows + self.cols - 1} values, got {seq.size}"
            )
        object.__setattr__(self, "seq", seq)

    def dense(self) -> np.ndarray:
        return sliding_window_view(self.seq, self.cols)[: self.rows]


def hankel_matvec(h: HankelSpec, x: np.ndarray, dense_cutoff: int = DENSE_CUTOFF) -> np.ndarray:
    """``H x mod p``.

    ``y_i = sum_j seq[i + j] x_j`` is entry ``i + cols - 1`` of ``seq * reversed(x)``.
    Falls back to the dense product when the transform does not fit the field.
    """
    field = h.field
    x = field.vector(x)
    if x.size != h.cols:
        raise DimensionMismatch(f"Vector length {x.size} does not match Hankel width {h.cols}")
    if min(h.rows, h.cols) <= dense_cutoff:
        return field.matmul(h.dense(), x)
    try:
        full = field.ntt_convolve(h.seq, x[::-1])
    except LengthOverflow:
        return field.matmul(h.dense(), x)
    return full[h.cols - 1 : h.cols - 1 + h.rows]


__all__ = ["HankelSpec", "hankel_matvec", "DENSE_CUTOFF"]
