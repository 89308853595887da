import time

import numpy as np
import pytest

from walkforge.sdk import HankelSpec, PrimeField, hankel_matvec
from walkforge.sdk.exceptions import DimensionMismatch


def random_spec(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, field.p, size=rows + cols - 1, dtype=np.int64)
    x = rng.integers(0, field.p, size=cols, dtype=np.int64)
    return HankelSpec(seq, rows, cols, field), x


def test_scalar(field):
    assert hankel_matvec(HankelSpec([6], 1, 1, field), [7]).tolist() == [42]


def test_two_by_two(field):
    h = HankelSpec([1, 2, 3], 2, 2, field)
    assert h.dense().tolist() == [[1, 2], [2, 3]]
    assert hankel_matvec(h, [1, 1]).tolist() == [3, 5]


@pytest.mark.parametrize("rows,cols", [(500, 500), (40, 300), (300, 40), (33, 33), (1, 64)])
def test_transform_path_matches_dense(field, rows, cols):
    h, x = random_spec(field, rows, cols, rows * 1000 + cols)
    expected = field.matmul(h.dense(), x)
    assert hankel_matvec(h, x).tolist() == expected.tolist()
    assert hankel_matvec(h, x, dense_cutoff=0).tolist() == expected.tolist()


def test_falls_back_when_transform_does_not_fit():
    f = PrimeField(7)
    h, x = random_spec(f, 40, 40, 3)
    assert hankel_matvec(h, x).tolist() == f.matmul(h.dense(), x).tolist()


def test_linearity(field):
    h, x = random_spec(field, 70, 50, 5)
    _, y = random_spec(field, 70, 50, 6)
    c = 123456789
    combined = hankel_matvec(h, (c * x + y) % field.p)
    expected = (c * hankel_matvec(h, x) + hankel_matvec(h, y)) % field.p
    assert combined.tolist() == expected.tolist()


def test_zero_padding_leaves_product_unchanged(field):
    h, x = random_spec(field, 45, 30, 7)
    rng = np.random.default_rng(8)
    tail = rng.integers(0, field.p, size=19, dtype=np.int64)
    wider = HankelSpec(np.concatenate([h.seq, tail]), 45, 49, field)
    padded = np.concatenate([x, np.zeros(19, dtype=np.int64)])
    assert hankel_matvec(wider, padded).tolist() == hankel_matvec(h, x).tolist()
    taller = HankelSpec(np.concatenate([h.seq, tail]), 64, 30, field)
    assert hankel_matvec(taller, x)[:45].tolist() == hankel_matvec(h, x).tolist()


@pytest.mark.slow
def test_random_specs_match_dense(field):
    rng = np.random.default_rng(12)
    for trial in range(100):
        rows, cols = (int(2 ** rng.uniform(0, 12)) for _ in range(2))
        h, x = random_spec(field, rows, cols, 1000 + trial)
        expected = field.matmul(np.ascontiguousarray(h.dense()), x).tolist()
        assert hankel_matvec(h, x).tolist() == expected, (rows, cols)
        assert hankel_matvec(h, x, dense_cutoff=0).tolist() == expected, (rows, cols)


def test_shape_errors(field):
    with pytest.raises(DimensionMismatch):
        HankelSpec([1, 2], 2, 2, field)
    with pytest.raises(DimensionMismatch):
        HankelSpec([1], 0, 2, field)
    with pytest.raises(DimensionMismatch):
        hankel_matvec(HankelSpec([1, 2, 3], 2, 2, field), [1, 2, 3])


@pytest.mark.slow
def test_transform_beats_dense_at_scale(field):
    size = 1 << 12
    h, x = random_spec(field, size, size, 99)
    start = time.perf_counter()
    fast = hankel_matvec(h, x)
    fast_seconds = time.perf_counter() - start
    start = time.perf_counter()
    slow = field.matmul(np.ascontiguousarray(h.dense()), x)
    slow_seconds = time.perf_counter() - start
    assert fast.tolist() == slow.tolist()
    assert fast_seconds * 10 < slow_seconds
