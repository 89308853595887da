from walkforge.sdk import polynomial


def test_block_round_trip():
    assert polynomial.from_block([-1, -2], 7) == [1, 5, 6]
    assert polynomial.to_block([1, 5, 6], 7) == [6, 5]
    assert polynomial.to_block([2, 3, 4], 7) == [2, 5]


def test_normalize_and_degree():
    assert polynomial.normalize([0, 0, 8, -1], 7) == [1, 6]
    assert polynomial.normalize([0, 7], 7) == []
    assert polynomial.degree([1, 6]) == 1
    assert polynomial.degree([]) == -1


def test_arithmetic():
    p = 7
    f = [1, 1]         # x + 1
    g = [1, 6]         # x - 1
    product = polynomial.mul(f, g, p)
    assert product == [1, 0, 6]
    assert polynomial.add(f, g, p) == [2, 0]
    assert polynomial.divmod_poly(product, f, p) == (g, [])
    assert polynomial.rem([1, 0, 0], f, p) == [1]
    assert polynomial.sub_mul(product, f, g, p) == []


def test_divides():
    p = 998244353
    x = [1, 0]
    x3_minus_4x = [1, 0, p - 4, 0]
    assert polynomial.divides(x, x3_minus_4x, p)
    assert not polynomial.divides([1, 1], x3_minus_4x, p)
    assert polynomial.divides([1, 1], [], p)
    assert not polynomial.divides([], [1], p)


def test_monic_and_format():
    assert polynomial.monic([3, 6], 7) == [1, 2]
    assert polynomial.monic([], 7) == []
    assert polynomial.format_poly([1, 0, 5, 1]) == "x^3 + 5*x + 1"
    assert polynomial.format_poly([]) == "0"
