"""Special functions used by the product asymptotics.

Hurwitz zeta, digamma, Bernoulli polynomials and Lerch's transcendent, each
evaluated with mpmath arithmetic and an explicit remainder estimate so that the
truncation error stays below 2^(8 - prec).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .modular import ExactPhase

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "hurwitz_zeta",
    "digamma",
    "lerch_phi",
]


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa gives B_k with B_1 = +1/2; flip it to the t/(e^t - 1) convention.
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _bernoulli_table(max(n, 1))[n]


def bernoulli_poly(n: int, x):
    """B_n(x) from t e^(xt) / (e^t - 1).  Exact for rational x."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return sum(comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1))
    total = mpmath.mpf(0)
    for k in range(n + 1):
        bk = bernoulli_number(k)
        if bk:
            total += comb(n, k) * mpmath.mpf(bk.numerator) / bk.denominator * x ** (n - k)
    return total


def _mp(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def hurwitz_zeta(s, a, prec: int = 256):
    """zeta(s, a) = sum_{n>=0} (n + a)^(-s) for Re s > 1, Re a > 0.

    Euler-Maclaurin with a head of length N: the remainder after the last
    Bernoulli term is bounded by the size of the first omitted term times
    |s + 2M + 1| / (Re s + 2M + 1).
    """
    with mpmath.workprec(prec + 20):
        s, a = _mp(s), _mp(a)
        if mpmath.re(s) <= 1:
            raise ValueError("need Re(s) > 1")
        if mpmath.re(a) <= 0:
            raise ValueError("need Re(a) > 0")
        eps = mpmath.mpf(2) ** (8 - prec)
        n_head = max(16, prec // 3)
        head = mpmath.fsum((k + a) ** (-s) for k in range(n_head))
        x = n_head + a
        total = head + x ** (1 - s) / (s - 1) + x ** (-s) / 2
        rising = s  # s (s+1) ... (s+2k-2)
        power = x ** (-s - 1)
        fact = mpmath.mpf(2)
        k = 1
        while True:
            b2k = bernoulli_number(2 * k)
            term = mpmath.mpf(b2k.numerator) / b2k.denominator / fact * rising * power
            total += term
            nxt_b = bernoulli_number(2 * k + 2)
            bound = (
                abs(mpmath.mpf(nxt_b.numerator) / nxt_b.denominator)
                / (fact * (2 * k + 1) * (2 * k + 2))
                * abs(rising * (s + 2 * k - 1) * (s + 2 * k))
                * abs(power / x**2)
                * abs(s + 2 * k + 1)
                / (mpmath.re(s) + 2 * k + 1)
            )
            if bound < eps * abs(total):
                break
            if k > 4 * prec:
                raise ArithmeticError("Euler-Maclaurin tail did not shrink")
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            power /= x**2
            fact *= (2 * k + 1) * (2 * k + 2)
            k += 1
        return +total


def digamma(a, prec: int = 256):
    """psi(a) for Re a > 0 by upward recurrence and the Stirling-type series."""
    with mpmath.workprec(prec + 20):
        a = _mp(a)
        if mpmath.re(a) <= 0:
            raise ValueError("need Re(a) > 0")
        eps = mpmath.mpf(2) ** (8 - prec)
        shift = max(0, int(prec // 2) - int(mpmath.floor(mpmath.re(a))))
        acc = mpmath.fsum(1 / (a + j) for j in range(shift))
        x = a + shift
        total = mpmath.log(x) - 1 / (2 * x)
        x2 = x * x
        xp = x2
        k = 1
        while True:
            b2k = bernoulli_number(2 * k)
            term = mpmath.mpf(b2k.numerator) / b2k.denominator / (2 * k * xp)
            total -= term
            nb = bernoulli_number(2 * k + 2)
            bound = abs(mpmath.mpf(nb.numerator) / nb.denominator / ((2 * k + 2) * xp * x2))
            if bound < eps * max(abs(total), 1):
                break
            if k > 4 * prec:
                raise ArithmeticError("digamma asymptotic series did not shrink")
            xp *= x2
            k += 1
        return +(total - acc)


def lerch_phi(z, s, a, prec: int = 256):
    """Phi(z, s, a) = sum_{n>=0} z^n / (n + a)^s.

    For |z| < 1 the series is summed directly and stopped by the geometric
    tail bound |z|^N / ((N + a)^Re(s) (1 - |z|)).  On the unit circle z must
    be a root of unity (an ``ExactPhase``, or +-1) and Re s > 1; then
    Phi = b^(-s) sum_j z^j zeta(s, (j + a)/b).
    """
    with mpmath.workprec(prec + 20):
        s, a = _mp(s), _mp(a)
        if mpmath.re(a) <= 0:
            raise ValueError("need Re(a) > 0")
        if isinstance(z, ExactPhase):
            phase = z
        else:
            zz = _mp(z)
            if abs(zz) < 1:
                return _lerch_inside(zz, s, a, prec)
            if zz == 1:
                phase = ExactPhase(Fraction(0))
            elif zz == -1:
                phase = ExactPhase(Fraction(1, 2))
            else:
                raise ValueError("on or outside the unit circle pass z as an ExactPhase")
        if mpmath.re(s) <= 1:
            raise ValueError("need Re(s) > 1 on the unit circle")
        b = phase.r.denominator
        total = mpmath.mpc(0)
        for j in range(b):
            total += (phase**j).to_complex(prec + 20) * hurwitz_zeta(s, (j + a) / b, prec + 10)
        total *= mpmath.mpf(b) ** (-s)
        return total.real if abs(total.imag) == 0 else total


def _lerch_inside(z, s, a, prec):
    eps = mpmath.mpf(2) ** (8 - prec)
    r = abs(z)
    total = mpmath.mpc(0)
    zn = mpmath.mpc(1)
    n = 0
    sigma = mpmath.re(s)
    while True:
        total += zn / (n + a) ** s
        n += 1
        zn *= z
        tail = r**n / ((n + a) ** sigma * (1 - r))
        if tail < eps * max(abs(total), eps):
            break
    return total.real if mpmath.im(z) == 0 and mpmath.im(s) == 0 else total
