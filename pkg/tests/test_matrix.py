import numpy as np
import pytest

from walkforge.sdk import DenseMatrix, PrimeField, mat_inverse, mat_mul, mat_pow
from walkforge.sdk.exceptions import DimensionMismatch, Singular
from walkforge.sdk.matrix import nullspace, row_reduce


def random_matrix(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    return DenseMatrix(rng.integers(0, field.p, size=(rows, cols), dtype=np.int64), field)


def naive_product(a, b):
    p = a.field.p
    out = [[0] * b.cols for _ in range(a.rows)]
    for i in range(a.rows):
        for j in range(b.cols):
            out[i][j] = sum(int(a[i, t]) * int(b[t, j]) for t in range(a.cols)) % p
    return out


def test_identity_product(field):
    b = random_matrix(field, 5, 5, 0)
    assert DenseMatrix.identity(field, 5) @ b == b


def test_fibonacci_companion(field):
    fib = DenseMatrix.from_rows(field, [[0, 1], [1, 1]])
    state = DenseMatrix.from_rows(field, [[5], [8]])
    assert (fib @ state).to_rows() == [[8], [13]]


def test_product_matches_triple_loop(field):
    a = random_matrix(field, 9, 9, 1)
    b = random_matrix(field, 9, 9, 2)
    assert mat_mul(a, b).to_rows() == naive_product(a, b)


def test_product_associative(field):
    a, b, c = (random_matrix(field, 8, 8, s) for s in (3, 4, 5))
    assert (a @ b) @ c == a @ (b @ c)


def test_product_rectangular_and_mismatch(field):
    a = random_matrix(field, 3, 4, 6)
    b = random_matrix(field, 4, 2, 7)
    assert mat_mul(a, b).to_rows() == naive_product(a, b)
    with pytest.raises(DimensionMismatch):
        mat_mul(b, b)


def test_strassen_matches_blocked(field):
    a = random_matrix(field, 37, 37, 8)
    b = random_matrix(field, 37, 37, 9)
    assert mat_mul(a, b, strassen_threshold=8) == mat_mul(a, b)


def test_data_is_read_only(field):
    m = DenseMatrix.identity(field, 2)
    with pytest.raises(ValueError):
        m.data[0, 0] = 5


def test_inverse_examples(field):
    assert mat_inverse(DenseMatrix.identity(field, 4)) == DenseMatrix.identity(field, 4)
    two = DenseMatrix.from_rows(field, [[2]])
    assert mat_inverse(two).to_rows() == [[499122177]]


def test_inverse_multiply_back(field):
    a = random_matrix(field, 12, 12, 10)
    assert a @ a.inverse() == DenseMatrix.identity(field, 12)
    assert a.inverse() @ a == DenseMatrix.identity(field, 12)


def test_inverse_needs_column_pivoting(field):
    a = DenseMatrix.from_rows(field, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert a @ a.inverse() == DenseMatrix.identity(field, 3)


def test_singular_and_non_square(field):
    with pytest.raises(Singular):
        mat_inverse(DenseMatrix.from_rows(field, [[1, 2], [2, 4]]))
    with pytest.raises(DimensionMismatch):
        mat_inverse(random_matrix(field, 2, 3, 11))


def test_powers(field):
    a = random_matrix(field, 6, 6, 12)
    assert mat_pow(a, 0) == DenseMatrix.identity(field, 6)
    assert mat_pow(a, 1) == a
    assert mat_pow(a, 5) == a @ a @ a @ a @ a
    assert a ** 3 == a @ a @ a


@pytest.mark.slow
def test_random_instances_against_exact_arithmetic(field):
    p = field.p
    rng = np.random.default_rng(13)
    for trial in range(200):
        rows, inner, cols = (int(rng.integers(1, 33)) for _ in range(3))
        a = random_matrix(field, rows, inner, 2 * trial)
        b = random_matrix(field, inner, cols, 2 * trial + 1)
        exact = (a.data.astype(object) @ b.data.astype(object)) % p
        assert mat_mul(a, b).to_rows() == exact.tolist()

        square = random_matrix(field, inner, inner, 5000 + trial)
        threshold = int(rng.integers(2, 9))
        assert mat_mul(square, square, strassen_threshold=threshold) == mat_mul(square, square)
        try:
            inverse = mat_inverse(square)
        except Singular:
            assert square.rank() < inner
        else:
            assert square @ inverse == DenseMatrix.identity(field, inner)


def test_power_exponents_add(field):
    rng = np.random.default_rng(14)
    for trial in range(10):
        a = random_matrix(field, 7, 7, 100 + trial)
        i, j = (int(k) for k in rng.integers(0, 40, size=2))
        assert mat_pow(a, i + j) == mat_pow(a, i) @ mat_pow(a, j)
        assert mat_pow(a, i + j, strassen_threshold=2) == mat_pow(a, i + j)


def test_companion_square_last_column(field):
    c = DenseMatrix.companion(field, [-1, -2, -3, -4, -5])
    assert c.data[:, 4].tolist() == [1, 2, 3, 4, 5]
    assert mat_pow(c, 2).data[:, 4].tolist() == [5, 11, 17, 23, 29]


def test_block_diagonal(field):
    a = DenseMatrix.from_rows(field, [[1]])
    b = DenseMatrix.from_rows(field, [[2, 3], [4, 5]])
    assert DenseMatrix.block_diagonal(field, [a, b]).to_rows() == [[1, 0, 0], [0, 2, 3], [0, 4, 5]]


def test_rank_and_nullspace():
    f = PrimeField(7)
    m = np.array([[1, 2, 3], [2, 4, 6]])
    reduced, pivots = row_reduce(f, m)
    assert pivots == [0]
    assert reduced[0].tolist() == [1, 2, 3]
    basis, free = nullspace(f, m)
    assert free == [1, 2]
    assert basis.shape == (3, 2)
    assert not f.matmul(m % 7, basis).any()
    assert basis[free].tolist() == [[1, 0], [0, 1]]
    assert DenseMatrix(m, f).rank() == 1
