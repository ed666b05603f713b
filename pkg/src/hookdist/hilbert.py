"""Poincare polynomials of Hilbert schemes of points on C^2.

``goettsche_series`` expands prod_m 1/(1 - T^(2m-2) q^m) and
``buryak_feigin_series`` expands the quasihomogeneous T_{alpha,beta} version.
Betti sums over T-degrees in a residue class are read straight off the
polynomials, so everything here is exact integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .series import IntSeries, eta_like_product, partition_series

__all__ = [
    "PoincareSeries",
    "goettsche_series",
    "buryak_feigin_series",
    "betti_sum",
    "delta",
    "delta_quasi",
]


class PoincareSeries:
    """Truncated sum_n P_n(T) q^n with P_n stored densely by T-degree.

    ``table[n, j]`` is the coefficient of T^j q^n.  Only even T-degrees can be
    nonzero; they are stored anyway so indices are plain Betti indices.
    """

    __slots__ = ("_c", "label")

    def __init__(self, table: np.ndarray, label: str = ""):
        table = np.asarray(table, dtype=object)
        if table.ndim != 2:
            raise ValueError("table must be 2-d")
        table.flags.writeable = False
        self._c = table
        self.label = label

    @classmethod
    def _from_even(cls, even: np.ndarray, label: str) -> "PoincareSeries":
        rows, cols = even.shape
        full = np.empty((rows, max(2 * cols - 1, 1)), dtype=object)
        full.fill(0)
        full[:, ::2] = even
        return cls(full, label)

    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    @property
    def table(self) -> np.ndarray:
        return self._c

    def poly(self, n: int) -> list[int]:
        """Coefficients of P_n(T), trailing zeros dropped."""
        row = list(self._c[n])
        while len(row) > 1 and row[-1] == 0:
            row.pop()
        return row

    def at_one(self) -> IntSeries:
        """Specialization T = 1."""
        return IntSeries(self._c.sum(axis=1))

    def __repr__(self) -> str:
        return f"PoincareSeries({self.label or 'unnamed'}, order={self.order})"


def _zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


def _divide_shifted(arr: np.ndarray, step: int, tshift: int) -> None:
    """In place: arr <- arr / (1 - T2^tshift q^step), with arr indexed [q, T2]."""
    rows, cols = arr.shape
    if tshift >= cols:
        return
    for start in range(step, rows, step):
        end = min(start + step, rows)
        src = arr[start - step : end - step, : cols - tshift]
        arr[start:end, tshift:] += src


@lru_cache(maxsize=8)
def goettsche_series(order: int) -> PoincareSeries:
    """G(T; q) = prod_{m >= 1} 1 / (1 - T^(2m - 2) q^m) up to q^order.

    Internally indexed by T^2; the q^n coefficient has T^2-degree n - (#parts) <= n - 1.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    even = _zeros((order + 1, max(order, 1)))
    even[0, 0] = 1
    for m in range(1, order + 1):
        _divide_shifted(even, m, m - 1)
    return PoincareSeries._from_even(even, "goettsche")


@lru_cache(maxsize=8)
def buryak_feigin_series(alpha: int, beta: int, order: int) -> PoincareSeries:
    """G_{alpha,beta}(T; q) = F_1(T^2; q^(alpha+beta))^(-1) prod (1 - q^((alpha+beta)m)) / (1 - q^m)."""
    if alpha <= 0 or beta <= 0 or gcd(alpha, beta) != 1:
        raise ValueError(f"(alpha, beta) = ({alpha}, {beta}) must be coprime positive integers")
    s = alpha + beta
    # F_1(T^2; y)^(-1) = prod_m 1/(1 - T^2 y^m); the T^2-degree counts parts, at most order // s.
    inner = order // s
    f1 = _zeros((inner + 1, inner + 1))
    f1[0, 0] = 1
    for m in range(1, inner + 1):
        _divide_shifted(f1, m, 1)
    eta_part = eta_like_product([(s, 1), (1, -1)], order).coeffs
    even = _zeros((order + 1, inner + 1))
    for j in range(inner + 1):
        # q^(s j) * eta_part, weighted by the T^2-polynomial of row j.
        row = f1[j]
        if not any(row):
            continue
        even[s * j :] += np.multiply.outer(eta_part[: order + 1 - s * j], row)
    return PoincareSeries._from_even(even, f"buryak_feigin({alpha},{beta})")


def betti_sum(series: PoincareSeries, a: int, b: int, n: int) -> int:
    """B(a, b; n): sum of Betti numbers b_j of the degree-n term over j = a mod b."""
    if not 0 <= a < b:
        raise ValueError("need 0 <= a < b")
    if not 0 <= n <= series.order:
        raise ValueError(f"n={n} outside series order {series.order}")
    row = series.table[n]
    return int(sum(row[a::b]))


def _ratio(series: PoincareSeries, a: int, b: int, n: int) -> Fraction:
    p = partition_series(max(n, 0)).coeffs[n]
    return Fraction(betti_sum(series, a, b, n), int(p))


def delta(a: int, b: int, n: int, series: PoincareSeries | None = None) -> Fraction:
    """delta(a, b; n) = B(a, b; (C^2)^[n]) / p(n), exactly."""
    series = series if series is not None else goettsche_series(n)
    return _ratio(series, a, b, n)


def delta_quasi(alpha: int, beta: int, a: int, b: int, n: int, series: PoincareSeries | None = None) -> Fraction:
    """delta_{alpha,beta}(a, b; n) for the T_{alpha,beta}-fixed Hilbert scheme."""
    series = series if series is not None else buryak_feigin_series(alpha, beta, n)
    return _ratio(series, a, b, n)
