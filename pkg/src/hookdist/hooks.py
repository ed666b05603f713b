"""Hook lengths, t-hook counts modulo b and the 2-/3-core identities.

The brute-force side (``partitions``, ``hook_multiset``, ``brute_force_pt``)
only ever uses the definition of a hook length, so it can serve as an oracle
for the generating-function side (``han_series``, ``pt_series``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .modular import is_prime, legendre, ord_p
from .series import (
    CycSeries,
    IntSeries,
    cyc_geometric_factor,
    eta_like_product,
    extract_component,
)

__all__ = [
    "Partition",
    "HookQuery",
    "partitions",
    "hook_multiset",
    "t_hook_distribution",
    "brute_force_pt",
    "han_series",
    "pt_series",
    "nekrasov_okounkov_check",
    "core_series",
    "triangular_indicator_series",
    "c3_divisor_series",
    "vanishing_predicate",
    "vanishing_pairs",
    "verify_vanishing",
    "key_identity_check",
    "BRUTE_FORCE_LIMIT",
]

BRUTE_FORCE_LIMIT = 60


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be nonincreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))


@dataclass(frozen=True)
class HookQuery:
    t: int
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.t <= 1:
            raise ValueError("t must exceed 1")
        if self.b < 2:
            raise ValueError("b must be at least 2")
        if not 0 <= self.a < self.b:
            raise ValueError("need 0 <= a < b")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n in descending lexicographic order."""

    def gen(remaining: int, bound: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(remaining, bound), 0, -1):
            prefix.append(first)
            yield from gen(remaining - first, first, prefix)
            prefix.pop()

    yield from gen(n, n, [])


def _hooks(parts: tuple[int, ...]) -> list[int]:
    if not parts:
        return []
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    return [(p - k) + (conj[j] - j) - 1 for k, p in enumerate(parts) for j in range(p)]


def hook_multiset(lam) -> Counter:
    """Multiset of hook lengths (lambda_k - k) + (lambda'_j - j) + 1."""
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    Partition(parts)
    return Counter(_hooks(parts))


@lru_cache(maxsize=None)
def t_hook_distribution(n: int, t: int) -> Counter:
    """Counter mapping #H_t(lambda) to the number of lambda |- n with that count."""
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}")
    dist: Counter = Counter()
    for lam in partitions(n):
        dist[sum(1 for h in _hooks(lam) if h % t == 0)] += 1
    return dist


def brute_force_pt(query: HookQuery) -> int:
    """p_t(a, b; n) by enumerating every partition of n."""
    dist = t_hook_distribution(query.n, query.t)
    return sum(c for k, c in dist.items() if k % query.b == query.a)


@lru_cache(maxsize=32)
def han_series(t: int, b: int, order: int) -> CycSeries:
    """H_t(x; q) with x^b = 1: the x^a component of the q^n coefficient is p_t(a, b; n).

    Built as F_2(x; q^t)^(-t) * (q^t; q^t)^t / (q; q).  The first factor is
    expanded in y = q^t to order N // t with geometric recurrences and then
    spread out, which keeps the cost near N^2 b / t big-integer operations.
    """
    if t <= 1:
        raise ValueError("t must exceed 1")
    if b < 2:
        raise ValueError("b must be at least 2")
    inner_order = order // t
    f2 = cyc_geometric_factor(b, inner_order, ((n, n, -t) for n in range(1, inner_order + 1)))
    eta_part = eta_like_product([(t, t), (1, -1)], order)
    return f2.spread(t, order).mul_int(eta_part)


def pt_series(t: int, a: int, b: int, order: int) -> IntSeries:
    """sum_n p_t(a, b; n) q^n up to q^order."""
    if not 0 <= a < b:
        raise ValueError("need 0 <= a < b")
    return extract_component(han_series(t, b, order), a)


def _no_lhs(order: int, w: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        total = Fraction(0)
        for lam in partitions(n):
            prod = Fraction(1)
            for h in _hooks(lam):
                prod *= 1 - Fraction(w, h * h)
                if prod == 0:
                    break
            total += prod
        out[n] = total
    return out


def nekrasov_okounkov_check(order: int, wset=None) -> dict:
    """Check sum_lambda q^|lambda| prod_h (1 - w/h^2) = prod (1 - q^n)^(w - 1).

    Both sides are polynomials in w of degree <= order in each q-coefficient,
    so agreement at order + 2 distinct integers certifies the identity in w.
    """
    if order > 25:
        raise ValueError("left side enumerates partitions; keep order <= 25")
    ws = list(wset) if wset is not None else list(range(-1, order + 1))
    cases = []
    for w in ws:
        lhs = _no_lhs(order, w)
        rhs = eta_like_product([(1, w - 1)], order).tolist()
        cases.append({"w": w, "pass": lhs == [Fraction(c) for c in rhs]})
    certified = len(set(ws)) >= order + 2
    return {
        "order": order,
        "pass": all(c["pass"] for c in cases),
        "polynomial_identity_certified": certified and all(c["pass"] for c in cases),
        "cases": cases,
    }


def triangular_indicator_series(order: int) -> IntSeries:
    coeffs = [0] * (order + 1)
    k = 0
    while k * (k + 1) // 2 <= order:
        coeffs[k * (k + 1) // 2] = 1
        k += 1
    return IntSeries(coeffs)


def _symbol_mod3(d: int) -> int:
    return (0, 1, -1)[d % 3]


def c3_divisor_series(order: int) -> IntSeries:
    """c_3(n) = sum_{d | 3n + 1} (d/3)."""
    coeffs = []
    for n in range(order + 1):
        m = 3 * n + 1
        total = 0
        d = 1
        while d * d <= m:
            if m % d == 0:
                total += _symbol_mod3(d)
                if d * d != m:
                    total += _symbol_mod3(m // d)
            d += 1
        coeffs.append(total)
    return IntSeries(coeffs)


def core_series(t: int, which: str, order: int) -> IntSeries:
    """B_t(q) = (q;q)^(-t) or the t-core series C_t(q) = (q^t;q^t)^t / (q;q).

    For C the eta-quotient expansion is compared against the closed form
    (triangular numbers for t = 2, the divisor sum for t = 3).
    """
    if t not in (2, 3):
        raise ValueError("only t in {2, 3} is supported")
    if which == "B":
        return eta_like_product([(1, -t)], order)
    if which != "C":
        raise ValueError("which must be 'B' or 'C'")
    product = eta_like_product([(t, t), (1, -1)], order)
    closed = triangular_indicator_series(order) if t == 2 else c3_divisor_series(order)
    if product != closed:
        raise AssertionError(f"{t}-core product and closed form disagree")
    return product


def vanishing_predicate(t: int, ell: int, a1: int, a2: int) -> bool:
    """Whether the vanishing theorem applies to (t, ell, a1, a2).

    t = 2: ((-16 a1 + 8 a2 + 1) / ell) = -1 with 0 <= a1, a2 < ell.
    t = 3: ell = 2 mod 3 and ord_ell(-9 a1 + 3 a2 + 1) = 1 with 0 <= a1, a2 < ell^2.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if t == 2:
        if ell == 2:
            raise ValueError("t = 2 needs an odd prime")
        if not (0 <= a1 < ell and 0 <= a2 < ell):
            raise ValueError("need 0 <= a1, a2 < ell")
        return legendre(-16 * a1 + 8 * a2 + 1, ell) == -1
    if t == 3:
        if ell % 3 != 2:
            raise ValueError("t = 3 needs ell = 2 mod 3")
        m = ell * ell
        if not (0 <= a1 < m and 0 <= a2 < m):
            raise ValueError("need 0 <= a1, a2 < ell^2")
        return ord_p(-9 * a1 + 3 * a2 + 1, ell) == 1
    raise ValueError("t must be 2 or 3")


def _vanishing_modulus(t: int, ell: int) -> int:
    return ell if t == 2 else ell * ell


def vanishing_pairs(t: int, ell: int) -> list[tuple[int, int]]:
    m = _vanishing_modulus(t, ell)
    return [(a1, a2) for a1 in range(m) for a2 in range(m) if vanishing_predicate(t, ell, a1, a2)]


def verify_vanishing(t: int, ell: int, a1: int, a2: int, nmax: int, *, require_predicate: bool = True) -> dict:
    """Check p_t(a1, M; M n + a2) = 0 for all arguments <= nmax, M = ell or ell^2.

    With ``require_predicate=False`` the same scan runs on any pair, which is
    how negative controls are exercised; the report lists the nonzero hits.
    """
    if require_predicate and not vanishing_predicate(t, ell, a1, a2):
        raise ValueError("predicate is false for this pair")
    m = _vanishing_modulus(t, ell)
    series = pt_series(t, a1, m, nmax).coeffs
    nonzero = [(int(n), int(series[n])) for n in range(a2, nmax + 1, m) if series[n] != 0]
    return {
        "t": t,
        "ell": ell,
        "modulus": m,
        "a1": a1,
        "a2": a2,
        "nmax": nmax,
        "checked": len(range(a2, nmax + 1, m)),
        "nonzero": nonzero,
        "pass": not nonzero,
    }


def key_identity_check(ell: int, a1: int, nmax: int) -> dict:
    """p_2(a1, ell; N) = sum over 2m + k(k+1)/2 = N, m = a1 mod ell of b_2(m)."""
    if ell == 2 or not is_prime(ell):
        raise ValueError("ell must be an odd prime")
    b2 = core_series(2, "B", nmax).coeffs
    rhs = np.zeros(nmax + 1, dtype=object)
    rhs[:] = 0
    k = 0
    while k * (k + 1) // 2 <= nmax:
        tri = k * (k + 1) // 2
        for m in range(a1 % ell, (nmax - tri) // 2 + 1, ell):
            rhs[2 * m + tri] += b2[m]
        k += 1
    lhs = pt_series(2, a1 % ell, ell, nmax).coeffs
    mismatches = [n for n in range(nmax + 1) if lhs[n] != rhs[n]]
    return {"ell": ell, "a1": a1, "nmax": nmax, "mismatches": mismatches, "pass": not mismatches}
