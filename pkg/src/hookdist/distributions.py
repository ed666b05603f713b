"""Limiting proportions c_t(a,b;n), d(a,b) and a truncated exact formula.

The exact formula for the coefficients c_{t,b,r}(n) of H_t(zeta_b^r; q) is a
Bessel series over cusps h/k.  ``zuckerman_truncated`` sums the shells
k <= Kmax; the generating function is q^(-1/24) times a weight -1/2 form, so
the Fourier offset is alpha = -1/24 and the Bessel argument uses n - 1/24.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from .hooks import han_series, pt_series
from .modular import (
    ExactPhase,
    _sign_exponent,
    epsilon,
    hook_constant_residue,
    indicator,
    is_prime,
    lambda_invariant,
    legendre,
    omega,
)
from .series import eta_like_product, partition_series

__all__ = [
    "ALPHA",
    "DistributionConstant",
    "TruncationPlan",
    "ZuckermanResult",
    "hardy_ramanujan_main",
    "ct_constant",
    "d_constant",
    "psi_ratio",
    "bessel_I_threehalves",
    "bessel_I_threehalves_series",
    "r_value",
    "zuckerman_truncated",
    "twisted_coefficient",
    "shell_main_term",
    "pt_asymptotic_main",
]

ALPHA = Fraction(-1, 24)


def _check_odd_prime(b: int):
    if b == 2 or not is_prime(b):
        raise ValueError(f"b={b} must be an odd prime")


def hardy_ramanujan_main(n: int, prec: int = 256) -> mpmath.mpf:
    """e^(pi sqrt(2n/3)) / (4 sqrt(3) n)."""
    if n < 1:
        raise ValueError("n must be positive")
    with mpmath.workprec(prec):
        return mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3)) / (4 * mpmath.sqrt(3) * n)


@dataclass(frozen=True)
class DistributionConstant:
    """c_t(a,b;n) = 1/b + phase * raw.

    ``raw`` is the rational part of the correction and ``phase`` the unit in
    front of it (the sign for odd t, i^((1-t)(b-1)/2) eps_b for even t).  The
    phase always lands on +-1, so ``value`` is an exact rational.
    """

    t: int
    a: int
    b: int
    n: int
    raw: Fraction
    phase: ExactPhase = field(default_factory=ExactPhase.one)

    @property
    def correction(self) -> Fraction:
        return self.phase.sign() * self.raw

    @property
    def value(self) -> Fraction:
        return Fraction(1, self.b) + self.correction

    def __float__(self) -> float:
        return float(self.value)

    def render(self, prec: int = 256) -> mpmath.mpc:
        """Numeric value built from the unreduced phase."""
        with mpmath.workprec(prec):
            raw = mpmath.mpf(self.raw.numerator) / self.raw.denominator
            return mpmath.mpf(1) / self.b + raw * self.phase.to_complex(prec)


def ct_constant(t: int, a: int, b: int, n: int) -> DistributionConstant:
    """c_t(a, b; n), with b an odd prime and t > 1."""
    _check_odd_prime(b)
    if t <= 1:
        raise ValueError("t must exceed 1")
    if not 0 <= a < b:
        raise ValueError("need 0 <= a < b")
    if t % b == 0:
        return DistributionConstant(t, a, b, n, Fraction(0))
    sign = _sign_exponent(t, b)
    if t % 2:
        raw = Fraction(indicator(a, b, t, n) * legendre(t, b), b ** ((t + 1) // 2))
        return DistributionConstant(t, a, b, n, raw, sign)
    unit = sign * epsilon(b)
    if not unit.is_real():
        raise AssertionError(f"phase {unit.r} is not real for t={t}, b={b}")
    symbol = legendre(hook_constant_residue(t, b) + a * t - n, b)
    return DistributionConstant(t, a, b, n, Fraction(symbol, b ** (t // 2)), unit)


def d_constant(a: int, b: int) -> Fraction:
    """d(a, b): 1/b for odd b, 2/b for even a and b, 0 for odd a and even b."""
    if b < 1 or not 0 <= a < b:
        raise ValueError("need 0 <= a < b")
    if b % 2:
        return Fraction(1, b)
    return Fraction(2, b) if a % 2 == 0 else Fraction(0)


def psi_ratio(t: int, a: int, b: int, n: int, order: int | None = None) -> Fraction:
    """Psi_t(a, b; n) = p_t(a, b; n) / p(n), exact."""
    order = n if order is None else order
    if n > order:
        raise ValueError(f"n={n} needs series order >= {n}, got {order}")
    num = pt_series(t, a, b, order).coeffs[n]
    return Fraction(int(num), int(partition_series(order).coeffs[n]))


def bessel_I_threehalves(x, prec: int = 256) -> mpmath.mpf:
    """I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x), x > 0.

    Below x = 1/2 the ascending series is used since the closed form cancels.
    """
    with mpmath.workprec(prec + 20):
        x = mpmath.mpf(x)
        if x <= 0:
            raise ValueError("x must be positive")
        if x < 0.5:
            return +bessel_I_threehalves_series(x, prec=prec)
        return +(mpmath.sqrt(2 / (mpmath.pi * x)) * (mpmath.cosh(x) - mpmath.sinh(x) / x))


def bessel_I_threehalves_series(x, terms: int | None = None, prec: int = 256) -> mpmath.mpf:
    """sum_m (x/2)^(2m + 3/2) / (m! Gamma(m + 5/2))."""
    with mpmath.workprec(prec + 20):
        x = mpmath.mpf(x)
        half = x / 2
        term = half ** mpmath.mpf(1.5) / mpmath.gamma(mpmath.mpf(2.5))
        total = term
        eps = mpmath.mpf(2) ** (-prec - 10)
        m = 0
        while True:
            m += 1
            term *= half * half / (m * (m + mpmath.mpf(1.5)))
            total += term
            if terms is not None:
                if m + 1 >= terms:
                    break
            elif abs(term) < eps * abs(total):
                break
        return total


def r_value(k: int, h: int, t: int, b: int, rres: int, n1: int, n2: int, n3: int) -> Fraction:
    """r_{k,h,t,b}(n1, n2, n3), the exponent governing the principal part at h/k."""
    g = gcd(k, t)
    lam = lambda_invariant(t, rres, b, h, k)
    return (
        1
        - g * g
        + Fraction(lam * lam, b * b)
        - 24 * (Fraction(g * g * n1, t) + Fraction(lam * lam * n2, t * b * b) + n3)
    )


@dataclass(frozen=True)
class TruncationPlan:
    kmax: int
    prec: int = 128

    def __post_init__(self):
        if self.kmax < 1:
            raise ValueError("kmax must be positive")
        if self.prec < 53:
            raise ValueError("precision below 53 bits is not supported")


@dataclass
class ZuckermanResult:
    value: mpmath.mpc
    shells: list = field(default_factory=list)  # (k, shell sum)
    plan: TruncationPlan | None = None

    @property
    def last_shell(self) -> float:
        """Magnitude of the k = Kmax shell, a heuristic error proxy."""
        return float(abs(self.shells[-1][1])) if self.shells else 0.0


def _inverse_neg1(x: int, m: int) -> int:
    """The residue y in [0, m) with x y = -1 mod m."""
    if m == 1:
        return 0
    try:
        return (-pow(x, -1, m)) % m
    except ValueError as exc:
        raise ArithmeticError(f"{x} is not invertible mod {m}") from exc


def _admissible_triples(t: int, b: int, g: int, lam: int, cap: Fraction):
    """(n1, n2, n3) with 24 (g^2 n1/t + lam^2 n2/(t b^2) + n3) <= cap."""
    w1 = Fraction(24 * g * g, t)
    w2 = Fraction(24 * lam * lam, t * b * b)
    n1 = 0
    while n1 * w1 <= cap:
        rest1 = cap - n1 * w1
        n2 = 0
        while n2 * w2 <= rest1:
            rest2 = rest1 - n2 * w2
            for n3 in range(int(rest2 // 24) + 1):
                yield n1, n2, n3
            n2 += 1
        n1 += 1


def _shell(t, b, rres, n, k, prec, qt, ptt, pp):
    g = gcd(k, t)
    k1, t1 = k // g, t // g
    x = mpmath.mpf(n) + mpmath.mpf(ALPHA.numerator) / ALPHA.denominator
    total = mpmath.mpc(0)
    for h in range(k):
        if gcd(h, k) != 1:
            continue
        lam = lambda_invariant(t, rres, b, h, k)
        H2, K2 = (h * b * t + rres * k) // lam, k * b // lam
        om = omega(H2, K2) ** t * omega(h, k) / omega(h * t1, k1) ** t
        h_kt = _inverse_neg1(h * t1, k1)
        h_ktbr = _inverse_neg1(H2, K2)
        h_prime = _inverse_neg1(h, k)
        cap = 1 - g * g + Fraction(lam * lam, b * b)
        if cap <= 0:
            continue
        inner = mpmath.mpc(0)
        for n1, n2, n3 in _admissible_triples(t, b, g, lam, cap):
            r = r_value(k, h, t, b, rres, n1, n2, n3)
            if r <= 0:
                continue
            coeff = qt[n1] * ptt[n2] * pp[n3]
            if coeff == 0:
                continue
            ph = ExactPhase(Fraction(g * b * h_kt * n1 + lam * h_ktbr * n2 + b * h_prime * n3, k * b))
            rf = mpmath.mpf(r.numerator) / r.denominator
            arg = mpmath.pi / k * mpmath.sqrt(2 * x * rf / 3)
            inner += coeff * ph.to_complex(prec) * (rf / 24) ** mpmath.mpf(0.75) * bessel_I_threehalves(arg, prec)
        if inner == 0:
            continue
        scale = (mpmath.mpf(g * b) / lam) ** (mpmath.mpf(t) / 2)
        total += (om * ExactPhase(Fraction(-n * h, k))).to_complex(prec) * scale * inner
    return total / k


def zuckerman_truncated(t: int, b: int, rres: int, n: int, plan: TruncationPlan) -> ZuckermanResult:
    """Partial sum over k <= Kmax of the exact formula for c_{t,b,r}(n).

    No rigorous tail bound; ``last_shell`` is the size of the k = Kmax shell.
    """
    _check_odd_prime(b)
    if t <= 1 or t % b == 0:
        raise ValueError("need t > 1 with gcd(t, b) = 1")
    if not 0 < rres < b:
        raise ValueError("need 0 < r < b")
    if n + ALPHA <= 0:
        raise ValueError(f"n + alpha = {n + ALPHA} must be positive")
    if plan.kmax < b:
        raise ValueError(f"kmax={plan.kmax} must include the dominant shell k={b}")
    depth = 2 * t * b * b  # generous bound on n1, n2, n3 from the admissibility cap
    qt = eta_like_product([(1, t)], depth).coeffs
    ptt = eta_like_product([(1, -t)], depth).coeffs
    pp = partition_series(depth).coeffs
    with mpmath.workprec(plan.prec):
        shells = []
        total = mpmath.mpc(0)
        x = mpmath.mpf(n) + mpmath.mpf(ALPHA.numerator) / ALPHA.denominator
        pref = 2 * mpmath.pi * x ** mpmath.mpf(-0.75)
        for k in range(1, plan.kmax + 1):
            s = pref * _shell(t, b, rres, n, k, plan.prec, qt, ptt, pp)
            shells.append((k, s))
            total += s
        return ZuckermanResult(total, shells, plan)


def twisted_coefficient(t: int, b: int, rres: int, n: int, order: int | None = None, prec: int = 128) -> mpmath.mpc:
    """c_{t,b,r}(n) = sum_a p_t(a, b; n) zeta_b^(r a), from the exact series."""
    order = n if order is None else order
    row = han_series(t, b, order).table[n]
    with mpmath.workprec(prec):
        return mpmath.fsum(int(row[a]) * ExactPhase.root_of_unity(rres * a, b).to_complex(prec) for a in range(b))


def shell_main_term(t: int, b: int, rres: int, n: int, *, uncorrected: bool = False, prec: int = 128):
    """Leading behaviour of the k = b shell.

    (omega_{-r tbar, b} / omega_{-r, b}^t) e^(2 pi i n r tbar / b) b^((1-t)/2) times the
    Hardy-Ramanujan main term.  ``uncorrected=True`` uses b^(-t/2 - 1) instead, which is
    smaller by b^(3/2) and inconsistent with c_t(a, b; n).
    """
    _check_odd_prime(b)
    if t % b == 0:
        return mpmath.mpc(0)
    tbar = pow(t, -1, b)
    ph = omega(-rres * tbar, b) / omega(-rres, b) ** t * ExactPhase(Fraction(n * rres * tbar, b))
    with mpmath.workprec(prec):
        power = mpmath.mpf(b) ** (-mpmath.mpf(t) / 2 - 1 if uncorrected else mpmath.mpf(1 - t) / 2)
        return ph.to_complex(prec) * power * hardy_ramanujan_main(n, prec)


def pt_asymptotic_main(t: int, a: int, b: int, n: int, prec: int = 256) -> mpmath.mpf:
    """c_t(a, b; n) e^(pi sqrt(2n/3)) / (4 sqrt(3) n)."""
    c = ct_constant(t, a, b, n).value
    with mpmath.workprec(prec):
        return mpmath.mpf(c.numerator) / c.denominator * hardy_ramanujan_main(n, prec)
