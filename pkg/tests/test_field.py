import numpy as np
import pytest

from walkforge.sdk import NTT_PRIMES, PrimeField
from walkforge.sdk.exceptions import ConfigError, ContractError, LengthOverflow, ZeroInverse


def test_scalar_arithmetic():
    f = PrimeField(7)
    assert f.add(3, 5).value == 1
    assert f.sub(3, 5).value == 5
    assert f.mul(0, 6).value == 0
    assert (f.elem(3) * 5).value == 1
    assert (-f.elem(2)).value == 5


def test_reflected_operators():
    f = PrimeField(7)
    assert (5 - f.elem(3)).value == 2
    assert (1 - f.elem(3)).value == 5
    assert (2 + f.elem(6)).value == 1
    assert (3 * f.elem(5)).value == 1


def test_inverse_of_two(field):
    assert field.mul(499122177, 2).value == 1
    assert field.inv(2).value == 499122177
    assert field.inv(1).value == 1


def test_inverse_random(field):
    rng = np.random.default_rng(1)
    for a in rng.integers(1, field.p, size=1000):
        a = int(a)
        assert a * field.inv(a).value % field.p == 1
        assert field.inv(a).value == pow(a, -1, field.p)


def test_inverse_of_zero(field):
    with pytest.raises(ZeroInverse):
        field.inv(0)
    with pytest.raises(ZeroInverse):
        field.elem(field.p).inverse()


def test_field_laws():
    rng = np.random.default_rng(2)
    f = PrimeField(1000003)
    for a, b, c in rng.integers(0, f.p, size=(10_000, 3)):
        a, b, c = int(a), int(b), int(c)
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, f.add(b, c).value) == f.add(f.mul(a, b).value, f.mul(a, c).value)


def test_mixed_fields_rejected():
    with pytest.raises(ContractError):
        PrimeField(7).elem(1) + PrimeField(11).elem(1)


@pytest.mark.parametrize("p", [1, 4, 998244353 * 3, 1 << 31, 2305843009213693951])
def test_invalid_moduli(p):
    with pytest.raises(ConfigError):
        PrimeField(p)


def test_derived_parameters(field):
    assert field.generator == 3
    assert field.max_ntt_len == 1 << 23
    assert PrimeField(7).max_ntt_len == 2


def test_sample_respects_exclusions():
    rng = np.random.default_rng(0)
    assert PrimeField.sample(rng, exclude=NTT_PRIMES[1:]).p == NTT_PRIMES[0]
    with pytest.raises(ConfigError):
        PrimeField.sample(rng, exclude=NTT_PRIMES)


def test_vector_reduces_big_and_negative_ints(field):
    v = field.vector([-1, field.p, 10**30])
    assert v.dtype == np.int64
    assert v.tolist() == [field.p - 1, 0, 10**30 % field.p]


def test_matmul_delayed_reduction_matches_object_product(field):
    rng = np.random.default_rng(3)
    a = rng.integers(0, field.p, size=(5, 40), dtype=np.int64)
    b = rng.integers(0, field.p, size=(40, 6), dtype=np.int64)
    expected = (a.astype(object) @ b.astype(object)) % field.p
    assert field.matmul(a, b).tolist() == expected.tolist()


def test_ntt_convolve_small(field):
    assert field.ntt_convolve([1, 2], [3, 4]).tolist() == [3, 10, 8]
    assert field.ntt_convolve([6], [7]).tolist() == [42]
    assert field.ntt_convolve([], [1]).tolist() == []


@pytest.mark.parametrize("log_size", range(17))
def test_ntt_round_trip(field, log_size):
    rng = np.random.default_rng(log_size)
    values = rng.integers(0, field.p, size=1 << log_size, dtype=np.int64)
    assert np.array_equal(field.ntt_inverse(field.ntt_forward(values)), values)


def test_ntt_convolve_matches_schoolbook(field):
    rng = np.random.default_rng(4)
    x = rng.integers(0, field.p, size=257, dtype=np.int64)
    y = rng.integers(0, field.p, size=257, dtype=np.int64)
    assert field.ntt_convolve(x, y).tolist() == field.schoolbook_convolve(x, y).tolist()


def test_ntt_length_overflow():
    f = PrimeField(7)
    with pytest.raises(LengthOverflow):
        f.ntt_convolve([1, 1], [1, 1])
    assert f.convolve([1, 1], [1, 1]).tolist() == [1, 2, 1]


def test_convolve_large_input_uses_transform(field):
    rng = np.random.default_rng(5)
    x = rng.integers(0, field.p, size=100, dtype=np.int64)
    y = rng.integers(0, field.p, size=70, dtype=np.int64)
    assert field.convolve(x, y).tolist() == field.schoolbook_convolve(x, y).tolist()
