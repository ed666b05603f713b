from fractions import Fraction

import pytest

from hookdist.hilbert import betti_sum, buryak_feigin_series, delta, delta_quasi, goettsche_series
from hookdist.series import partition_series
from hookdist.tables import render_decimal


@pytest.fixture(scope="module")
def goettsche():
    return goettsche_series(200)


@pytest.fixture(scope="module")
def bf23():
    return buryak_feigin_series(2, 3, 200)


def trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def test_goettsche_reference_coefficients(goettsche):
    # polynomials indexed by T-degree
    assert trim(goettsche.poly(2)) == [1, 0, 1]
    assert trim(goettsche.poly(3)) == [1, 0, 1, 0, 1]
    assert trim(goettsche.poly(4)) == [1, 0, 1, 0, 2, 0, 1]


def test_goettsche_against_partition_statistic():
    # coefficient of q^n T^(2k) counts partitions of n with n - length = k
    from hookdist.hooks import partitions

    series = goettsche_series(14)
    for n in range(15):
        expect = [0] * (2 * n + 1)
        for lam in partitions(n):
            expect[2 * (n - len(lam))] += 1
        assert trim(series.poly(n)) == trim(expect)


def test_buryak_feigin_reference_coefficients(bf23):
    assert trim(bf23.poly(5)) == [6, 0, 1]
    assert trim(bf23.poly(6)) == [10, 0, 1]
    assert trim(bf23.poly(7)) == [13, 0, 2]
    assert trim(bf23.poly(2)) == [2]


def test_noncoprime_rejected():
    with pytest.raises(ValueError):
        buryak_feigin_series(2, 4, 10)


@pytest.mark.parametrize("which", ["goettsche", "bf23"])
def test_at_one_is_partition_series(which, request):
    s = request.getfixturevalue(which)
    assert s.at_one() == partition_series(200)


@pytest.mark.parametrize("which", ["goettsche", "bf23"])
def test_odd_degrees_vanish_and_nonnegative(which, request):
    tab = request.getfixturevalue(which).table
    assert all(tab[n][d] == 0 for n in range(tab.shape[0]) for d in range(1, tab.shape[1], 2))
    assert (tab >= 0).all()


@pytest.mark.parametrize("which", ["goettsche", "bf23"])
@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_betti_sums_decompose_p(which, b, request):
    s = request.getfixturevalue(which)
    p = partition_series(200)
    for n in range(201):
        assert sum(betti_sum(s, a, b, n) for a in range(b)) == p[n]


@pytest.mark.parametrize("b", [2, 4])
def test_odd_residues_vanish_for_even_modulus(goettsche, bf23, b):
    for s in (goettsche, bf23):
        for n in range(51):
            for a in range(1, b, 2):
                assert betti_sum(s, a, b, n) == 0


def test_small_betti_sums(goettsche):
    assert [betti_sum(goettsche, a, 3, 4) for a in range(3)] == [2, 2, 1]
    assert delta(0, 3, 2, goettsche) == Fraction(1, 2)
    assert delta(2, 3, 2, goettsche) == Fraction(1, 2)
    assert delta(0, 3, 1, goettsche) == 1


def test_reference_decimals(goettsche, bf23):
    assert render_decimal(delta(0, 3, 20, goettsche)) == "0.3333"
    assert render_decimal(delta_quasi(2, 3, 1, 3, 100, bf23)) == "0.2658"


def test_delta_rows_sum_to_one(goettsche, bf23):
    for n in (1, 7, 50, 200):
        assert sum(delta(a, 5, n, goettsche) for a in range(5)) == 1
        assert sum(delta_quasi(2, 3, a, 5, n, bf23) for a in range(5)) == 1


def test_delta_tends_to_one_third(goettsche):
    # smoothed trend: windowed maxima of |delta - 1/3| shrink
    dev = [max(abs(delta(a, 3, n, goettsche) - Fraction(1, 3)) for a in range(3)) for n in range(50, 201)]
    windows = [max(dev[i:i + 50]) for i in (0, 50, 100)]
    assert windows[0] > windows[1] > windows[2]


def test_range_checks(goettsche):
    with pytest.raises(ValueError):
        betti_sum(goettsche, 3, 3, 4)
    with pytest.raises(ValueError):
        betti_sum(goettsche, 0, 3, 201)
