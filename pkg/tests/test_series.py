from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookdist.series import (
    CycSeries,
    IntSeries,
    cyc_geometric_factor,
    cyc_invert,
    cyc_mul,
    eta_like_product,
    extract_component,
    partition_series,
    series_invert,
    series_mul,
)


@lru_cache(maxsize=None)
def count_partitions(n, largest):
    # independent oracle: partitions of n with parts <= largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def p(n):
    return count_partitions(n, n)


def direct_product(m, w, order):
    """prod_{n>=1} (1 - q^{mn})^w by repeated binomial multiplication (w >= 0)."""
    out = [1] + [0] * order
    for n in range(1, order // m + 1):
        for _ in range(w):
            out = [out[i] - (out[i - m * n] if i >= m * n else 0) for i in range(order + 1)]
    return out


def test_difference_of_squares():
    s = IntSeries([1, 1], 2) * IntSeries([1, -1], 2)
    assert s.tolist() == [1, 0, -1]


def test_partition_generating_function_times_euler_product():
    prod = series_mul(partition_series(20), eta_like_product([(1, 1)], 20))
    assert prod == IntSeries.one(20)


def test_identity_is_neutral():
    s = IntSeries([3, -1, 4, 1, -5, 9])
    assert IntSeries.one(5) * s == s


def test_mixed_order_truncates_to_minimum():
    s = IntSeries([1, 2, 3, 4]) + IntSeries([1, 1])
    assert s.order == 1 and s.tolist() == [2, 3]


def test_geometric_inverse():
    assert series_invert(IntSeries([1, -1], 8)).tolist() == [1] * 9


def test_inverse_of_euler_product_gives_partitions():
    inv = series_invert(eta_like_product([(1, 1)], 9))
    assert inv.tolist() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_double_inverse():
    s = IntSeries([-1, 4, 0, 2, -7, 1, 1])
    assert series_invert(series_invert(s)) == s


def test_non_unit_constant_term_rejected():
    with pytest.raises(ValueError):
        series_invert(IntSeries([2, 1, 0]))


def test_pentagonal_pattern():
    assert eta_like_product([(1, 1)], 7).tolist() == [1, -1, -1, 0, 0, 1, 0, 1]


def test_negative_exponent_partitions():
    assert eta_like_product([(1, -1)], 5).tolist() == [1, 1, 2, 3, 5, 7]


def test_two_core_product_is_triangular_indicator():
    assert eta_like_product([(2, 2), (1, -1)], 6).tolist() == [1, 1, 0, 1, 0, 0, 1]


def test_euler_partition_counts_to_40():
    assert eta_like_product([(1, -1)], 40).tolist() == [p(n) for n in range(41)]


@pytest.mark.parametrize("m,w", [(1, 3), (2, 1), (3, 2), (5, 4)])
def test_eta_product_against_direct_expansion(m, w):
    assert eta_like_product([(m, w)], 30).tolist() == direct_product(m, w, 30)


def test_negative_power_inverts():
    s = IntSeries([1, 2, -1, 3], 6)
    assert s ** -2 * s ** 2 == IntSeries.one(6)


small_coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=65)


def _series(cs):
    return IntSeries(cs, 64)


@settings(max_examples=40, deadline=None)
@given(small_coeffs, small_coeffs, small_coeffs)
def test_ring_laws(x, y, z):
    a, b, c = _series(x), _series(y), _series(z)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([1, -1]), st.lists(st.integers(-50, 50), max_size=40))
def test_times_inverse_is_one(u, tail):
    a = IntSeries([u] + tail, 40)
    assert series_mul(a, series_invert(a)) == IntSeries.one(40)


def test_series_is_immutable():
    s = IntSeries([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


# --- cyclotomic coefficients -------------------------------------------------


def test_conjugate_product_mod_cube_roots():
    left = CycSeries([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    right = CycSeries([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    assert cyc_mul(left, right).table.tolist() == [[1, 0, 0], [0, 0, 0], [0, 0, -1]]


def test_x_cubed_reduces_to_one():
    x2 = CycSeries([[0, 0, 1], [0, 0, 0]])
    x = CycSeries([[0, 1, 0], [0, 0, 0]])
    assert (x2 * x)[0].components == (1, 0, 0)


def test_inverse_f2_by_hand():
    # prod (1 - x^n q^n)^(-1): each partition of n contributes x^n, so q^n carries p(n) x^(n mod b)
    s = cyc_geometric_factor(3, 3, [(n, n, -1) for n in range(1, 4)])
    assert s.table.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 2], [3, 0, 0]]


def test_inverse_f2_general_oracle():
    order, b = 25, 4
    s = cyc_geometric_factor(b, order, [(n, n, -1) for n in range(1, order + 1)])
    for n in range(order + 1):
        expect = [0] * b
        expect[n % b] = p(n)
        assert list(s[n].components) == expect


def _random_cyc(rng, modulus, order):
    rows = rng.integers(-5, 6, size=(order + 1, modulus)).tolist()
    rows[0] = [1] + [0] * (modulus - 1)
    return CycSeries(rows)


@pytest.mark.parametrize("modulus", [2, 3, 5])
def test_specialization_commutes(modulus):
    rng = np.random.default_rng(modulus)
    a, b = _random_cyc(rng, modulus, 25), _random_cyc(rng, modulus, 25)
    sa, sb = a.specialize(), b.specialize()
    assert (a * b).specialize() == sa * sb
    assert (a + b).specialize() == sa + sb
    assert (a - b).specialize() == sa - sb
    assert cyc_invert(a).specialize() == series_invert(sa)
    assert a.spread(3, 40).specialize() == IntSeries([sa[n // 3] if n % 3 == 0 else 0 for n in range(41)])


def test_cyc_inverse_roundtrip():
    rng = np.random.default_rng(7)
    a = _random_cyc(rng, 4, 30)
    assert a * a.invert() == CycSeries.one(4, 30)


def test_mul_int_matches_embedding():
    rng = np.random.default_rng(11)
    a = _random_cyc(rng, 3, 20)
    s = IntSeries(rng.integers(-9, 10, size=21).tolist())
    assert a.mul_int(s) == a * CycSeries.from_int_series(s, 3)


def test_extract_embedded_series():
    s = partition_series(12)
    assert extract_component(CycSeries.from_int_series(s, 5), 0) == s


def test_components_sum_to_specialization():
    rng = np.random.default_rng(3)
    a = _random_cyc(rng, 5, 15)
    total = extract_component(a, 0)
    for j in range(1, 5):
        total = total + extract_component(a, j)
    assert total == a.specialize()


def test_extract_out_of_range():
    with pytest.raises(ValueError):
        extract_component(CycSeries.one(3, 4), 3)


def test_moduli_must_agree():
    with pytest.raises(ValueError):
        CycSeries.one(3, 4) * CycSeries.one(5, 4)
