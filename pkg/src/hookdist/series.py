"""Exact truncated power series.

Two coefficient rings are supported:

* ``IntSeries``: Z[[q]] truncated at q^N, arbitrary-precision integer coefficients.
* ``CycSeries``: (Z[x]/(x^b - 1))[[q]] truncated at q^N.  Coefficient n is a
  ``CycCoeff`` whose component j is the coefficient of x^j.

Coefficients live in read-only numpy object arrays so that the inner loops of
convolution run in C while the values stay exact Python ints.  Mixed-order
arithmetic truncates to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IntSeries",
    "CycCoeff",
    "CycSeries",
    "series_mul",
    "series_invert",
    "eta_like_product",
    "partition_series",
    "cyc_mul",
    "cyc_invert",
    "cyc_geometric_factor",
    "extract_component",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _as_object_array(values: Iterable[int], order: int | None) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype == object:
        arr = values.copy()
    else:
        arr = np.array([int(v) for v in values], dtype=object)
    if arr.ndim != 1:
        raise ValueError("IntSeries coefficients must be one-dimensional")
    if order is None:
        if len(arr) == 0:
            raise ValueError("cannot infer order from an empty coefficient list")
        return arr
    if order < 0:
        raise ValueError("order must be non-negative")
    if len(arr) > order + 1:
        return arr[: order + 1].copy()
    if len(arr) < order + 1:
        pad = np.zeros(order + 1 - len(arr), dtype=object)
        pad[:] = 0
        return np.concatenate([arr, pad])
    return arr


def _zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


class IntSeries:
    """Truncated power series sum_{n<=N} c_n q^n with integer coefficients.

    >>> s = IntSeries([1, 1], order=2)
    >>> (s * IntSeries([1, -1], order=2)).tolist()
    [1, 0, -1]
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        self._c = _frozen(_as_object_array(coeffs, order))

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "IntSeries":
        obj = cls.__new__(cls)
        obj._c = _frozen(arr)
        return obj

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "IntSeries":
        arr = _zeros(order + 1)
        if power <= order:
            arr[power] = coeff
        return cls._wrap(arr)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only view of the coefficient array (length ``order + 1``)."""
        return self._c

    def tolist(self) -> list[int]:
        return list(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._c[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"IntSeries([{head}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and bool(np.all(self._c == other._c))

    __hash__ = None

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return IntSeries._wrap(self._c[: order + 1].copy())

    def _common(self, other: "IntSeries"):
        n = min(self.order, other.order)
        return self._c[: n + 1], other._c[: n + 1]

    def __add__(self, other):
        if isinstance(other, int):
            arr = self._c.copy()
            arr[0] += other
            return IntSeries._wrap(arr)
        if not isinstance(other, IntSeries):
            return NotImplemented
        a, b = self._common(other)
        return IntSeries._wrap(a + b)

    __radd__ = __add__

    def __neg__(self):
        return IntSeries._wrap(-self._c)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        a, b = self._common(other)
        return IntSeries._wrap(a - b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries._wrap(self._c * other)
        if not isinstance(other, IntSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntSeries":
        if not isinstance(k, (int, np.integer)):
            raise TypeError("only integer powers are supported")
        k = int(k)
        if k < 0:
            return series_invert(self) ** (-k)
        result = IntSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self) -> "IntSeries":
        return series_invert(self)


def _convolve(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Schoolbook truncated convolution of two object arrays.

    Loops over the sparser operand so products with eta-like factors (mostly
    zero coefficients) cost O(N * nnz).
    """
    nz_a = np.flatnonzero(a[: order + 1] != 0)
    nz_b = np.flatnonzero(b[: order + 1] != 0)
    if len(nz_b) < len(nz_a):
        a, b, nz_a = b, a, nz_b
    out = _zeros(order + 1)
    for i in nz_a:
        i = int(i)
        out[i:] += a[i] * b[: order + 1 - i]
    return out


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Product of two series, truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    return IntSeries._wrap(_convolve(a.coeffs, b.coeffs, order))


def series_invert(a: IntSeries) -> IntSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    c = a.coeffs
    c0 = c[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit in Z")
    n_max = a.order
    nz = np.flatnonzero(c != 0)
    nz = nz[nz > 0]
    vals = c[nz]
    out = _zeros(n_max + 1)
    out[0] = c0
    dense = len(nz) > 64
    for n in range(1, n_max + 1):
        cnt = int(np.searchsorted(nz, n, side="right"))
        if cnt == 0:
            continue
        idx = nz[:cnt]
        if dense:
            s = np.dot(vals[:cnt], out[n - idx])
        else:
            s = 0
            for k, v in zip(idx, vals[:cnt]):
                s += v * out[n - k]
        out[n] = -c0 * s
    return IntSeries._wrap(out)


def _normalize_term(term: Sequence[int]) -> tuple[int, int, int]:
    if len(term) == 2:
        m, w = term
        e = m
    elif len(term) == 3:
        m, e, w = term
    else:
        raise ValueError(f"term must be (m, w) or (m, e, w), got {term!r}")
    if m <= 0 or e <= 0:
        raise ValueError("step and inner power must be positive")
    return int(m), int(e), int(w)


def eta_like_product(terms: Iterable[Sequence[int]], order: int) -> IntSeries:
    """Expand prod over terms of prod_{n>=0} (1 - q^(e + m n))^w to order N.

    Each term is ``(m, w)`` (so e = m, the usual (q^m; q^m)_inf^w) or
    ``(m, e, w)``.  Negative exponents are handled by building the positive
    power and inverting it.

    >>> eta_like_product([(1, 1)], 7).tolist()
    [1, -1, -1, 0, 0, 1, 0, 1]
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    pos = _zeros(order + 1)
    pos[0] = 1
    neg = _zeros(order + 1)
    neg[0] = 1
    for term in terms:
        m, e, w = _normalize_term(term)
        target = pos if w >= 0 else neg
        for _ in range(abs(w)):
            for k in range(e, order + 1, m):
                target[k:] = target[k:] - target[: order + 1 - k]
    result = IntSeries._wrap(pos)
    if np.any(neg[1:] != 0):
        result = result * series_invert(IntSeries._wrap(neg))
    return result


@lru_cache(maxsize=8)
def partition_series(order: int) -> IntSeries:
    """P(q) = 1 / (q; q)_inf, the generating function of p(n)."""
    return eta_like_product([(1, -1)], order)


@dataclass(frozen=True)
class CycCoeff:
    """An element sum_j c_j x^j of Z[x]/(x^b - 1)."""

    components: tuple[int, ...]

    def __post_init__(self):
        if len(self.components) == 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))

    @property
    def modulus(self) -> int:
        return len(self.components)

    def _check(self, other: "CycCoeff"):
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")

    def __add__(self, other: "CycCoeff") -> "CycCoeff":
        self._check(other)
        return CycCoeff(tuple(a + b for a, b in zip(self.components, other.components)))

    def __mul__(self, other: "CycCoeff") -> "CycCoeff":
        self._check(other)
        b = self.modulus
        out = [0] * b
        for i, u in enumerate(self.components):
            if u:
                for j, v in enumerate(other.components):
                    out[(i + j) % b] += u * v
        return CycCoeff(tuple(out))

    def specialize(self) -> int:
        """Image under x -> 1."""
        return sum(self.components)

    def __getitem__(self, j: int) -> int:
        return self.components[j]


class CycSeries:
    """Truncated series in q with coefficients in Z[x]/(x^b - 1).

    Stored as an ``(order + 1, b)`` object array; row n holds the components
    of the q^n coefficient.
    """

    __slots__ = ("_c",)

    def __init__(self, rows, modulus: int | None = None):
        arr = np.array([[int(v) for v in row] for row in rows], dtype=object)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise ValueError("CycSeries needs a non-empty 2-d coefficient table")
        if modulus is not None and arr.shape[1] != modulus:
            raise ValueError("row length does not match modulus")
        self._c = _frozen(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "CycSeries":
        obj = cls.__new__(cls)
        obj._c = _frozen(arr)
        return obj

    @classmethod
    def one(cls, modulus: int, order: int) -> "CycSeries":
        arr = _zeros((order + 1, modulus))
        arr[0, 0] = 1
        return cls._wrap(arr)

    @classmethod
    def from_int_series(cls, s: IntSeries, modulus: int, power: int = 0) -> "CycSeries":
        """Embed an integer series as s(q) * x^power."""
        arr = _zeros((s.order + 1, modulus))
        arr[:, power % modulus] = s.coeffs
        return cls._wrap(arr)

    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    @property
    def modulus(self) -> int:
        return self._c.shape[1]

    @property
    def table(self) -> np.ndarray:
        return self._c

    def __getitem__(self, n: int) -> CycCoeff:
        return CycCoeff(tuple(self._c[n]))

    def __repr__(self) -> str:
        return f"CycSeries(modulus={self.modulus}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycSeries):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    __hash__ = None

    def _common(self, other: "CycSeries"):
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        n = min(self.order, other.order)
        return self._c[: n + 1], other._c[: n + 1]

    def __add__(self, other: "CycSeries") -> "CycSeries":
        a, b = self._common(other)
        return CycSeries._wrap(a + b)

    def __sub__(self, other: "CycSeries") -> "CycSeries":
        a, b = self._common(other)
        return CycSeries._wrap(a - b)

    def __neg__(self) -> "CycSeries":
        return CycSeries._wrap(-self._c)

    def __mul__(self, other):
        if isinstance(other, CycSeries):
            return cyc_mul(self, other)
        if isinstance(other, IntSeries):
            return self.mul_int(other)
        if isinstance(other, int):
            return CycSeries._wrap(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def invert(self) -> "CycSeries":
        return cyc_invert(self)

    def truncate(self, order: int) -> "CycSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return CycSeries._wrap(self._c[: order + 1].copy())

    def specialize(self) -> IntSeries:
        """Image under x -> 1."""
        return IntSeries._wrap(self._c.sum(axis=1))

    def component(self, a: int) -> IntSeries:
        return extract_component(self, a)

    def mul_int(self, s: IntSeries) -> "CycSeries":
        """Multiply by an integer series, looping over the sparser side."""
        order = min(self.order, s.order)
        rows = self._c[: order + 1]
        c = s.coeffs[: order + 1]
        out = _zeros((order + 1, self.modulus))
        row_nz = np.flatnonzero(np.any(rows != 0, axis=1))
        c_nz = np.flatnonzero(c != 0)
        if len(row_nz) <= len(c_nz):
            for i in row_nz:
                i = int(i)
                out[i:] += np.multiply.outer(c[: order + 1 - i], rows[i])
        else:
            for i in c_nz:
                i = int(i)
                out[i:] += c[i] * rows[: order + 1 - i]
        return CycSeries._wrap(out)

    def spread(self, step: int, order: int) -> "CycSeries":
        """Substitute q -> q^step, truncating at ``order``."""
        if step <= 0:
            raise ValueError("step must be positive")
        out = _zeros((order + 1, self.modulus))
        m = min(self.order, order // step)
        out[: m * step + 1 : step] = self._c[: m + 1]
        return CycSeries._wrap(out)

    def evaluate_components(self, n: int):
        return tuple(self._c[n])


def cyc_mul(a: CycSeries, b: CycSeries) -> CycSeries:
    """Product in (Z[x]/(x^b - 1))[[q]], truncated to the smaller order."""
    A, B = a._common(b)
    order = A.shape[0] - 1
    out = _zeros(A.shape)
    for i in np.flatnonzero(np.any(A != 0, axis=1)):
        i = int(i)
        for j in range(a.modulus):
            coeff = A[i, j]
            if coeff:
                out[i:] += np.roll(coeff * B[: order + 1 - i], j, axis=1)
    return CycSeries._wrap(out)


def cyc_invert(a: CycSeries) -> CycSeries:
    """Inverse of a series whose constant coefficient is 1 (as an element of the ring)."""
    c0 = a._c[0]
    if c0[0] != 1 or any(c0[1:]):
        raise ValueError("constant coefficient must be 1 for inversion")
    order, b = a.order, a.modulus
    A = a._c
    out = _zeros((order + 1, b))
    out[0, 0] = 1
    nz = [int(i) for i in np.flatnonzero(np.any(A[1:] != 0, axis=1)) + 1]
    for n in range(1, order + 1):
        acc = _zeros(b)
        for k in nz:
            if k > n:
                break
            row = A[k]
            prev = out[n - k]
            for j in range(b):
                if row[j]:
                    acc += np.roll(row[j] * prev, j)
        out[n] = -acc
    return CycSeries._wrap(out)


def _divide_binomial(arr: np.ndarray, xpow: int, step: int) -> None:
    """In place: arr <- arr / (1 - x^xpow q^step)."""
    n_rows = arr.shape[0]
    for start in range(step, n_rows, step):
        end = min(start + step, n_rows)
        arr[start:end] += np.roll(arr[start - step : end - step], xpow, axis=1)


def _multiply_binomial(arr: np.ndarray, xpow: int, step: int) -> None:
    """In place: arr <- arr * (1 - x^xpow q^step)."""
    n_rows = arr.shape[0]
    if step < n_rows:
        arr[step:] = arr[step:] - np.roll(arr[: n_rows - step], xpow, axis=1)


def cyc_geometric_factor(
    modulus: int, order: int, pattern: Iterable[tuple[int, int, int]]
) -> CycSeries:
    """Build prod (1 - x^e q^s)^w over the given ``(e, s, w)`` triples.

    Negative ``w`` uses the geometric recurrence for 1/(1 - x^e q^s), so
    products like F_2(x; q^t)^(-t) never need a general inversion.
    """
    arr = _zeros((order + 1, modulus))
    arr[0, 0] = 1
    for e, s, w in pattern:
        if s <= 0:
            raise ValueError("q-exponent must be positive")
        if s > order:
            continue
        op = _divide_binomial if w < 0 else _multiply_binomial
        for _ in range(abs(w)):
            op(arr, e % modulus, s)
    return CycSeries._wrap(arr)


def extract_component(s: CycSeries, a: int) -> IntSeries:
    """The integer series formed by the x^a components of ``s``."""
    if not 0 <= a < s.modulus:
        raise ValueError(f"residue {a} out of range for modulus {s.modulus}")
    return IntSeries._wrap(s.table[:, a].copy())
