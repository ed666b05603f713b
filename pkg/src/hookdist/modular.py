"""Exact modular arithmetic: Dedekind sums, eta-multiplier phases, Legendre
symbols, the gcd invariant lambda, the indicator I and Kloosterman sums.

Phases are kept as exact rationals r mod 1 (``ExactPhase``) and only turned
into complex numbers at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

__all__ = [
    "ExactPhase",
    "KloostermanParams",
    "is_prime",
    "sawtooth",
    "dedekind_sum",
    "omega",
    "legendre",
    "epsilon",
    "lambda_invariant",
    "lambda_gcd",
    "indicator",
    "b_integral_residue",
    "hook_constant_residue",
    "kloosterman_direct",
    "kloosterman_closed",
    "dedekind_simplification_check",
    "ord_p",
]


@dataclass(frozen=True, order=True)
class ExactPhase:
    """The unimodular number exp(2 pi i r), with r stored in [0, 1)."""

    r: Fraction

    def __post_init__(self):
        r = Fraction(self.r)
        object.__setattr__(self, "r", r - (r.numerator // r.denominator))

    @classmethod
    def one(cls) -> "ExactPhase":
        return cls(Fraction(0))

    @classmethod
    def root_of_unity(cls, k: int, b: int) -> "ExactPhase":
        """zeta_b^k."""
        return cls(Fraction(k, b))

    def __mul__(self, other: "ExactPhase") -> "ExactPhase":
        return ExactPhase(self.r + other.r)

    def __truediv__(self, other: "ExactPhase") -> "ExactPhase":
        return ExactPhase(self.r - other.r)

    def __pow__(self, k: int) -> "ExactPhase":
        return ExactPhase(self.r * k)

    def inverse(self) -> "ExactPhase":
        return ExactPhase(-self.r)

    def is_real(self) -> bool:
        return self.r in (0, Fraction(1, 2))

    def sign(self) -> int:
        """+1 or -1 for real phases; raises otherwise."""
        if self.r == 0:
            return 1
        if self.r == Fraction(1, 2):
            return -1
        raise ValueError(f"phase {self.r} is not real")

    def to_complex(self, prec: int = 256) -> mpmath.mpc:
        with mpmath.workprec(prec):
            return mpmath.expjpi(2 * mpmath.mpf(self.r.numerator) / self.r.denominator)

    def __complex__(self) -> complex:
        return complex(self.to_complex(64))


@dataclass(frozen=True)
class KloostermanParams:
    a: int
    b: int
    t: int
    n: int

    def __post_init__(self):
        if self.b == 2 or not is_prime(self.b):
            raise ValueError(f"b={self.b} must be an odd prime")
        if self.t <= 1:
            raise ValueError("t must exceed 1")


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24 (covers 2^64)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ord_p(m: int, p: int) -> float | int:
    """p-adic valuation of m; infinity for m = 0."""
    if m == 0:
        return float("inf")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def sawtooth(x) -> Fraction:
    """((x)) = x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


@lru_cache(maxsize=None)
def _dedekind_sum_reduced(h: int, k: int) -> Fraction:
    total = Fraction(0)
    for mu in range(1, k):
        total += sawtooth(Fraction(mu, k)) * sawtooth(Fraction(h * mu, k))
    return total


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) from the defining sum over mu mod k."""
    if k < 1:
        raise ValueError("k must be positive")
    return _dedekind_sum_reduced(h % k, k)


def omega(h: int, k: int) -> ExactPhase:
    """omega_{h,k} = exp(pi i s(h,k)), after dividing h and k by gcd(h, k)."""
    if k < 1:
        raise ValueError("k must be positive")
    g = gcd(h, k)
    return ExactPhase(dedekind_sum(h // g, k // g) / 2)


def legendre(m: int, p: int) -> int:
    """Legendre symbol (m/p) for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    m %= p
    if m == 0:
        return 0
    return 1 if pow(m, (p - 1) // 2, p) == 1 else -1


def epsilon(b: int) -> ExactPhase:
    """epsilon_b: 1 if b = 1 mod 4, i if b = 3 mod 4."""
    if b % 2 == 0:
        raise ValueError("epsilon is defined for odd b")
    return ExactPhase(Fraction(0) if b % 4 == 1 else Fraction(1, 4))


def lambda_gcd(t: int, a: int, b: int, h: int, k: int) -> int:
    return gcd(k * b, h * b * t + a * k)


def lambda_invariant(t: int, a: int, b: int, h: int, k: int) -> int:
    """The three-case value of lambda_{t,a,b,h,k}, checked against gcd(kb, hbt + ak)."""
    if not (gcd(h, k) == 1 or (k == 1 and h == 0)):
        raise ValueError(f"h={h}, k={k} must be coprime")
    g = gcd(k, t)
    k1 = k // g
    if a % b == 0 and (k == 1 or k1 % b != 0):
        # xi = 1 is not primitive; gcd(kb, hbt) = b gcd(k, t) here, not gcd(k, t)
        raise ValueError(f"b={b} divides a={a}: case formula needs a primitive root")
    if k == 1 or k1 % b != 0:
        value = g
    elif (h * t // g + a * (k // (b * g))) % b != 0:
        value = g * b
    else:
        value = g * b * b
    check = lambda_gcd(t, a, b, h, k)
    if value != check:
        raise AssertionError(
            f"lambda case formula {value} != gcd formula {check} for "
            f"(t,a,b,h,k)=({t},{a},{b},{h},{k})"
        )
    return value


def b_integral_residue(x: Fraction, b: int) -> int:
    """Reduce a b-integral rational modulo b via the inverse of its denominator."""
    x = Fraction(x)
    if x.denominator % b == 0:
        raise ValueError(f"{x} is not {b}-integral")
    return x.numerator * pow(x.denominator, -1, b) % b


def hook_constant_residue(t: int, b: int) -> int:
    """(1 - t^2)(1 - b^2)/24 reduced mod b."""
    return b_integral_residue(Fraction((1 - t * t) * (1 - b * b), 24), b)


def _check_indicator_args(b: int, t: int):
    if b == 2 or not is_prime(b):
        raise ValueError(f"b={b} must be an odd prime")
    if t % b == 0:
        raise ValueError(f"b={b} divides t={t}")


def indicator(a: int, b: int, t: int, n: int) -> int:
    """b - 1 when (1-t^2)(1-b^2)/24 + at - n = 0 mod b, else -1."""
    _check_indicator_args(b, t)
    return b - 1 if (hook_constant_residue(t, b) + a * t - n) % b == 0 else -1


def _kloosterman_term(h: int, p: KloostermanParams) -> ExactPhase:
    a, b, t, n = p.a, p.b, p.t, p.n
    return omega(h, b) / omega(t * h, b) ** t * ExactPhase.root_of_unity((a * t - n) * h, b)


def kloosterman_direct(params: KloostermanParams, prec: int = 256) -> mpmath.mpc:
    """K(a,b,t;n) summed term by term from exact phases."""
    with mpmath.workprec(prec):
        total = mpmath.mpc(0)
        for h in range(1, params.b):
            total += _kloosterman_term(h, params).to_complex(prec)
        return total


def _sign_exponent(t: int, b: int) -> ExactPhase:
    """exp(pi i (1-t)(b-1)/4) as an exact phase."""
    return ExactPhase(Fraction((1 - t) * (b - 1), 8))


def kloosterman_closed(params: KloostermanParams, prec: int = 256) -> mpmath.mpc:
    """Closed-form value of K(a,b,t;n) for gcd(t, b) = 1.

    t odd: I(a,b,t,n) (-1)^((1-t)(b-1)/4) (t/b).
    t even: (-1)^((1-t)(b-1)/4) eps_b ((C + at - n)/b) sqrt(b), C the hook constant.
    The (-1)^(...) factor is read as exp(pi i (1-t)(b-1)/4), which is what the
    direct sum produces when the exponent is fractional.
    """
    a, b, t, n = params.a, params.b, params.t, params.n
    _check_indicator_args(b, t)
    sign = _sign_exponent(t, b)
    with mpmath.workprec(prec):
        if t % 2:
            value = indicator(a, b, t, n) * legendre(t, b)
            return value * sign.to_complex(prec)
        symbol = legendre(hook_constant_residue(t, b) + a * t - n, b)
        return symbol * (sign * epsilon(b)).to_complex(prec) * mpmath.sqrt(b)


def _bezout_solutions(h: int, b: int, count: int):
    """Solutions (alpha, beta) of alpha*h - beta*b = 1, minimal alpha first."""
    alpha = pow(h, -1, b)
    for j in range(count):
        al = alpha + j * b
        beta = (al * h - 1) // b
        yield al, beta


def _omega_from_multiplier(h: int, b: int, alpha: int, beta: int) -> ExactPhase:
    """omega_{h,b} via the eta-multiplier formula with alpha*h - beta*b = 1, b odd prime.

    The Legendre factor (h/b) is folded in as a phase 0 or 1/2.
    """
    r = Fraction((alpha + h - beta * h * b) * (1 - b * b), 24 * b) + Fraction(b - 1, 8)
    sym = ExactPhase(Fraction(0) if legendre(h, b) == 1 else Fraction(1, 2))
    return sym * ExactPhase(r)


def dedekind_simplification_check(b: int, t: int, hset=None, alternatives: int = 3) -> dict:
    """Compare omega_{h,b} / omega_{th,b}^t with its Legendre-symbol closed form.

    Both sides are exact phases, so the comparison is exact.  Each h is also
    rechecked through the eta-multiplier route with several Bezout pairs
    (alpha, beta) to confirm the result does not depend on the pair chosen.
    """
    if b == 2 or not is_prime(b):
        raise ValueError(f"b={b} must be an odd prime")
    if t % b == 0:
        raise ValueError("t must be coprime to b")
    hs = list(hset) if hset is not None else list(range(1, b))
    cases = []
    ok = True
    for h in hs:
        if h % b == 0:
            raise ValueError("h must be coprime to b")
        lhs = omega(h, b) / omega(t * h, b) ** t
        sym = legendre(h, b) * legendre(t * h, b) ** t
        rhs = (
            ExactPhase(Fraction(0) if sym == 1 else Fraction(1, 2))
            * _sign_exponent(t, b)
            * ExactPhase(Fraction((1 - t * t) * (1 - b * b) * h, 24 * b))
        )
        via_multiplier = set()
        for (al, be), (al2, be2) in zip(
            _bezout_solutions(h, b, alternatives), _bezout_solutions(t * h % b, b, alternatives)
        ):
            w1 = _omega_from_multiplier(h, b, al, be)
            w2 = _omega_from_multiplier(t * h % b, b, al2, be2)
            via_multiplier.add((w1 / w2**t).r)
        case_ok = lhs == rhs and via_multiplier == {lhs.r}
        ok &= case_ok
        cases.append(
            {"h": h, "lhs": str(lhs.r), "rhs": str(rhs.r), "bezout_phases": sorted(map(str, via_multiplier)), "pass": case_ok}
        )
    return {"b": b, "t": t, "pass": ok, "cases": cases}
