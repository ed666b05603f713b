"""The q-products F_1, F_2, F_3 near roots of unity and their leading asymptotics.

    F_1(xi; q) = prod_{n>=1} (1 - xi q^n)
    F_2(xi; q) = prod_{n>=1} (1 - (xi q)^n)
    F_3(xi; q) = prod_{n>=1} (1 - xi^(-1) (xi q)^n)

Direct evaluation works on logarithms.  Factors are multiplied until the tail
sum_{n>N} |log(1 - w_n)| <= 2 |q|^(N+1) / (1 - |q|) drops below 2^(8 - prec).
Logs and fractional powers use the principal branch throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
import numpy as np

from .modular import ExactPhase, is_prime, lambda_invariant, omega
from .specfun import bernoulli_number, bernoulli_poly, digamma, hurwitz_zeta, lerch_phi

__all__ = [
    "ConeSample",
    "cone_rays",
    "log_F_direct",
    "F_direct",
    "F1_asym",
    "F2_asym",
    "F3_asym",
    "log_F1_asym",
    "log_F2_asym",
    "log_F3_asym",
    "ratio_study",
    "f2_ratio_study",
    "eta_transform_check",
    "digamma_identity_check",
    "binet_integral_check",
    "euler_maclaurin_check",
    "em_istar",
    "loglog_slope",
]


@dataclass(frozen=True)
class ConeSample:
    """z = r e^(i alpha) with |alpha| <= theta < pi/2."""

    theta: float
    r: float
    alpha: float

    def __post_init__(self):
        if not 0 <= self.theta < math.pi / 2:
            raise ValueError("theta must lie in [0, pi/2)")
        if self.r <= 0:
            raise ValueError("r must be positive")
        if abs(self.alpha) > self.theta + 1e-15:
            raise ValueError("alpha outside the cone")

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.alpha), math.sin(self.alpha))

    def mpz(self, prec: int = 256) -> mpmath.mpc:
        with mpmath.workprec(prec):
            return mpmath.mpf(self.r) * mpmath.expj(mpmath.mpf(self.alpha))


def cone_rays(theta: float = math.pi / 4) -> list[float]:
    """Ray angles 0, +-theta/2, +-theta."""
    return [0.0, theta / 2, -theta / 2, theta, -theta]


def _as_phase(xi) -> ExactPhase:
    if isinstance(xi, ExactPhase):
        return xi
    if isinstance(xi, (int, Fraction)) and xi in (1, -1):
        return ExactPhase(Fraction(0) if xi == 1 else Fraction(1, 2))
    raise TypeError("xi must be an ExactPhase (or +-1)")


def _terms_needed(absq: float, prec: int) -> int:
    # 2|q|^(N+1)/(1-|q|) < 2^(8-prec)
    if absq == 0:
        return 1
    target = (8 - prec) * math.log(2) + math.log((1 - absq) / 2)
    return max(1, int(math.ceil(target / math.log(absq))))


def _logq(q):
    return mpmath.log(q)


def log_F_direct(which: int, xi, q, prec: int = 256, nfactors: int | None = None):
    """Principal-branch sum of log(1 - w_n) over the factors of F_which(xi; q).

    ``q`` may be given as a number or as ("log", L) with q = e^L, which avoids
    rounding q itself when |q| is close to 1.  For prec <= 53 a float64 path
    is used.
    """
    if which not in (1, 2, 3):
        raise ValueError("which must be 1, 2 or 3")
    phase = _as_phase(xi)
    with mpmath.workprec(prec + 20):
        L = mpmath.mpmathify(q[1]) if isinstance(q, tuple) else _logq(mpmath.mpmathify(q))
        absq = float(mpmath.exp(mpmath.re(L)))
        if absq >= 1:
            raise ValueError("need |q| < 1")
        n = nfactors if nfactors is not None else _terms_needed(absq, prec)
        th = 2 * mpmath.pi * mpmath.mpf(phase.r.numerator) / phase.r.denominator
        # w_n = exp(n L + c0 + n c1) with c0, c1 depending on which product
        c0, c1 = {1: (1j * th, 0), 2: (0, 1j * th), 3: (-1j * th, 1j * th)}[which]
        if prec <= 53:
            Lc = complex(L)
            ns = np.arange(1, n + 1, dtype=float)
            logw = ns * (Lc + complex(c1)) + complex(c0)
            w = np.exp(logw)
            return complex(math.fsum(np.log1p(-w).real) + 1j * math.fsum(np.log1p(-w).imag))
        step = mpmath.exp(L + c1)
        w = mpmath.exp(c0) * step
        total = mpmath.mpc(0)
        for _ in range(n):
            total += mpmath.log(1 - w)
            w *= step
        return +total


def F_direct(which: int, xi, q, prec: int = 256, nfactors: int | None = None):
    with mpmath.workprec(prec):
        return mpmath.exp(log_F_direct(which, xi, q, prec, nfactors))


def _order(phase: ExactPhase) -> int:
    return phase.r.denominator


def log_F1_asym(xi, z, prec: int = 256):
    """log of (1 - xi)^(-1/2) e^(-xi Phi(xi, 2, 1) / z)."""
    phase = _as_phase(xi)
    if _order(phase) == 1:
        raise ValueError("xi = 1 is excluded")
    with mpmath.workprec(prec + 20):
        x = phase.to_complex(prec + 20)
        z = mpmath.mpmathify(z)
        return -mpmath.log(1 - x) / 2 - x * lerch_phi(phase, 2, 1, prec) / z


def F1_asym(xi, z, prec: int = 256):
    with mpmath.workprec(prec):
        return mpmath.exp(log_F1_asym(xi, z, prec))


def log_F3_asym(xi, z, prec: int = 256):
    """log of sqrt(2 pi) (b^2 z)^(1/2 - 1/b) / Gamma(1/b) prod_j (1 - xi^j)^(-j/b) e^(-pi^2/(6 b^2 z))."""
    phase = _as_phase(xi)
    b = _order(phase)
    if b == 1:
        raise ValueError("xi = 1 is excluded")
    with mpmath.workprec(prec + 20):
        z = mpmath.mpmathify(z)
        out = mpmath.log(2 * mpmath.pi) / 2
        out += (mpmath.mpf(1) / 2 - mpmath.mpf(1) / b) * mpmath.log(b * b * z)
        out -= mpmath.loggamma(mpmath.mpf(1) / b)
        for j in range(1, b):
            out -= mpmath.mpf(j) / b * mpmath.log(1 - (phase**j).to_complex(prec + 20))
        out -= mpmath.pi**2 / (6 * b * b * z)
        return out


def F3_asym(xi, z, prec: int = 256):
    with mpmath.workprec(prec):
        return mpmath.exp(log_F3_asym(xi, z, prec))


def _f2_data(a: int, b: int, t: int, h: int, k: int):
    if b == 2 or not is_prime(b):
        raise ValueError(f"b={b} must be an odd prime")
    if not (0 <= h < k) or not (gcd(h, k) == 1 or (k == 1 and h == 0)):
        raise ValueError(f"invalid cusp h={h}, k={k}")
    lam = lambda_invariant(t, a, b, h, k)
    return lam, omega((h * b * t + a * k) // lam, k * b // lam)


def log_F2_asym(a: int, b: int, t: int, h: int, k: int, z, prec: int = 256):
    """log of omega^(-1) (lam/(t b z))^(1/2) e^(-pi lam^2 / (12 b^2 k t z)) for F_2(xi; q^t),
    xi = e^(2 pi i a/b), q = e^(2 pi i (h + i z)/k)."""
    lam, om = _f2_data(a, b, t, h, k)
    with mpmath.workprec(prec + 20):
        z = mpmath.mpmathify(z)
        out = -2j * mpmath.pi * mpmath.mpf(om.r.numerator) / om.r.denominator
        out += mpmath.log(mpmath.mpf(lam) / (t * b * z)) / 2
        out -= mpmath.pi * lam * lam / (12 * b * b * k * t * z)
        return out


def F2_asym(a: int, b: int, t: int, h: int, k: int, z, prec: int = 256):
    with mpmath.workprec(prec):
        return mpmath.exp(log_F2_asym(a, b, t, h, k, z, prec))


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log y against log x."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def ratio_study(part: int, b: int, *, theta: float = math.pi / 4, r0: float = 0.1, steps: int = 7, prec: int = 53) -> dict:
    """|F_direct / F_asym - 1| on dyadic radii along the five cone rays.

    part 1 uses xi = e^(2 pi i / b) in F_1, part 3 the same xi in F_3.  Each ray
    passes when the errors decrease monotonically and the log-log slope lies in
    [0.8, 1.2].  q = e^(-z).
    """
    if part not in (1, 3):
        raise ValueError("part must be 1 or 3")
    xi = ExactPhase.root_of_unity(1, b)
    asym = log_F1_asym if part == 1 else log_F3_asym
    rays = []
    for alpha in cone_rays(theta):
        radii, errs = [], []
        for k in range(steps):
            s = ConeSample(theta, r0 / 2**k, alpha)
            z = s.mpz(max(prec, 64) + 40)
            with mpmath.workprec(max(prec, 64) + 40):
                lhs = log_F_direct(part, xi, ("log", -z), prec)
                rhs = asym(xi, z, max(prec, 64))
                err = abs(mpmath.expm1(mpmath.mpmathify(lhs) - rhs))
            radii.append(s.r)
            errs.append(float(err))
        slope = loglog_slope(radii, errs)
        mono = all(errs[i + 1] < errs[i] for i in range(len(errs) - 1))
        rays.append(
            {"alpha": alpha, "radii": radii, "errors": errs, "slope": slope, "monotone": mono,
             "pass": mono and 0.8 <= slope <= 1.2}
        )
    return {"part": part, "b": b, "theta": theta, "rays": rays, "pass": all(r["pass"] for r in rays)}


def f2_ratio_study(a: int = 1, b: int = 3, t: int = 2, h: int = 0, k: int = 1, *, z0: float = 0.05,
                   steps: int = 6, tilt: float = math.pi / 6, prec: int = 53) -> dict:
    """|F_2(xi; q^t) / F2_asym - 1| along real z = z0/2^j; one tilted ray is informational."""

    def errors(angle):
        out = []
        for j in range(steps):
            with mpmath.workprec(max(prec, 64) + 40):
                z = mpmath.mpf(z0) / 2**j * mpmath.expj(angle)
                logq_t = 2j * mpmath.pi * t * (h + 1j * z) / k
                lhs = log_F_direct(2, ExactPhase.root_of_unity(a, b), ("log", logq_t), prec)
                rhs = log_F2_asym(a, b, t, h, k, z, max(prec, 64))
                out.append(float(abs(mpmath.expm1(mpmath.mpmathify(lhs) - rhs))))
        return out

    real = errors(0.0)
    tilted = errors(tilt)
    mono = all(real[i + 1] < real[i] for i in range(len(real) - 1))
    return {
        "a": a, "b": b, "t": t, "h": h, "k": k,
        "z": [z0 / 2**j for j in range(steps)],
        "errors": real,
        "tilted_errors": tilted,
        "pass": mono and real[-1] < real[0],
    }


def eta_transform_check(h: int, k: int, z, prec: int = 256, tol: float = 1e-20) -> dict:
    """(q; q) = omega_{h,k}^(-1) z^(-1/2) e^(pi (z - 1/z) / (12 k)) (q1; q1),
    q = e^(2 pi i (h + i z)/k), q1 = e^(2 pi i (h' + i/z)/k), h h' = -1 mod k."""
    if k < 1 or gcd(h, k) != 1:
        raise ValueError("need gcd(h, k) = 1")
    hp = (-pow(h, -1, k)) % k if k > 1 else 0
    one = ExactPhase.one()
    with mpmath.workprec(prec + 20):
        z = mpmath.mpmathify(z)
        if mpmath.re(z) <= 0:
            raise ValueError("need Re z > 0")
        lhs = log_F_direct(2, one, ("log", 2j * mpmath.pi * (h + 1j * z) / k), prec)
        rhs = log_F_direct(2, one, ("log", 2j * mpmath.pi * (hp + 1j / z) / k), prec)
        om = omega(h, k)
        rhs += -2j * mpmath.pi * mpmath.mpf(om.r.numerator) / om.r.denominator
        rhs += -mpmath.log(z) / 2 + mpmath.pi * (z - 1 / z) / (12 * k)
        err = abs(mpmath.expm1(rhs - lhs))
    return {"h": h, "k": k, "z": complex(z), "error": float(err), "pass": err < tol}


def digamma_identity_check(b: int, prec: int = 256, tol: float = 1e-25) -> dict:
    """sum_{j=1}^b psi(j/b) xi^j = b Log(1 - xi) for every primitive b-th root xi != 1."""
    if b < 2:
        raise ValueError("b must be at least 2")
    cases = []
    with mpmath.workprec(prec + 20):
        psis = [digamma(Fraction(j, b), prec) for j in range(1, b + 1)]
        for m in range(1, b):
            if gcd(m, b) != 1:
                continue
            xi = ExactPhase.root_of_unity(m, b)
            lhs = mpmath.fsum((xi**j).to_complex(prec + 20) * psis[j - 1] for j in range(1, b + 1))
            rhs = b * mpmath.log(1 - xi.to_complex(prec + 20))
            err = abs(lhs - rhs)
            cases.append({"m": m, "error": float(err), "pass": err < tol})
    return {"b": b, "cases": cases, "pass": all(c["pass"] for c in cases)}


def _binet_series_coeffs(N, terms: int):
    """Taylor coefficients g_j of e^(-x)/(x(1 - e^(-Nx))) - 1/(N x^2) + (1/N - 1/2) e^(-x)/x."""
    N = mpmath.mpmathify(N)
    exp_c = [mpmath.mpf((-1) ** m) / math.factorial(m) for m in range(terms + 3)]
    # u/(1 - e^(-u)) = sum_k B_k(1) u^k / k!
    bern = [N**k * mpmath.mpf(bernoulli_poly(k, 1).numerator) / bernoulli_poly(k, 1).denominator / math.factorial(k)
            for k in range(terms + 3)]
    c = [mpmath.fsum(exp_c[i] * bern[j - i] for i in range(j + 1)) for j in range(terms + 3)]
    return [c[j + 2] / N + (1 / N - mpmath.mpf(1) / 2) * exp_c[j + 1] for j in range(terms)]


def _binet_integrand(N):
    def g(x):
        e = mpmath.exp(-x)
        return e / (x * (-mpmath.expm1(-N * x))) - 1 / (N * x * x) + (1 / N - mpmath.mpf(1) / 2) * e / x

    return g


def _binet_integral(N, prec: int):
    with mpmath.workprec(prec):
        N = mpmath.mpmathify(N)
        eps = min(mpmath.mpf(1) / 4, mpmath.pi / (4 * N))
        coeffs = _binet_series_coeffs(N, 80)
        head = mpmath.fsum(cj * eps ** (j + 1) / (j + 1) for j, cj in enumerate(coeffs))
        tail = mpmath.quad(_binet_integrand(N), [eps, 1, 10, mpmath.inf])
        return head + tail


def binet_integral_check(N, prec: int = 128, tol: float = 1e-12) -> dict:
    """int_0^oo (e^(-x)/(x(1-e^(-Nx))) - 1/(N x^2) + (1/N - 1/2) e^(-x)/x) dx
    = log Gamma(1/N) + (1/2 - 1/N) log(1/N) - (1/2) log(2 pi)."""
    if N <= 0:
        raise ValueError("N must be positive")
    with mpmath.workprec(prec):
        Nm = mpmath.mpmathify(N)
        lhs = _binet_integral(Nm, prec)
        rhs = mpmath.loggamma(1 / Nm) + (mpmath.mpf(1) / 2 - 1 / Nm) * mpmath.log(1 / Nm) - mpmath.log(2 * mpmath.pi) / 2
        err = abs(lhs - rhs)
    return {"N": float(N), "quadrature": float(lhs), "closed_form": float(rhs), "error": float(err), "pass": err < tol}


def _em_f(u):
    return mpmath.exp(-u) / (u * (-mpmath.expm1(-u)))


def em_istar(A=1, prec: int = 128):
    """I*_{f,A} = int_0^oo (f(u) - 1/u^2 + e^(-A u)/(2u)) du by quadrature.

    The integrand is split as the N = 1 Binet integrand plus (e^(-Au) - e^(-u))/(2u);
    the second piece is integrated with its own series near 0.
    """
    with mpmath.workprec(prec):
        A = mpmath.mpmathify(A)
        base = _binet_integral(1, prec)
        eps = mpmath.mpf(1) / 4
        # (e^(-Au) - e^(-u))/(2u) = sum_{m>=1} (-1)^m (A^m - 1) u^(m-1) / (2 m!)
        head = mpmath.fsum((-1) ** m * (A**m - 1) * eps**m / (2 * m * mpmath.factorial(m)) for m in range(1, 80))
        tail = mpmath.quad(lambda u: (mpmath.exp(-A * u) - mpmath.exp(-u)) / (2 * u), [eps, 1, 10, mpmath.inf])
        return base + head + tail


def _em_lhs(a, z, prec):
    eps = mpmath.mpf(2) ** (-prec - 10)
    u = (a) * z
    total = mpmath.mpf(0)
    eu = mpmath.exp(-u)
    ez = mpmath.exp(-z)
    while True:
        term = eu / (u * (1 - eu))
        total += term
        if term < eps * total:
            break
        u += z
        eu *= ez
    return total


def _em_rhs(a, A, z, istar, prec, flip_log_sign=False):
    log_term = mpmath.log(A * z)
    if flip_log_sign:
        log_term = -log_term
    psi = digamma(a, prec)
    b1 = bernoulli_poly(1, a)
    c0 = bernoulli_number(2) / 2
    return (
        hurwitz_zeta(2, a, prec) / z**2
        + istar / z
        + (log_term + psi + mpmath.euler) / (2 * z)
        - mpmath.mpf(c0.numerator) / c0.denominator * b1
    )


def euler_maclaurin_check(a=Fraction(1, 3), A=1, zgrid=None, prec: int = 128, *, flip_log_sign: bool = False,
                          noise_bits: int = 24) -> dict:
    """Compare sum_{n>=0} f((n+a) z), f(u) = e^(-u)/(u(1 - e^(-u))), with its expansion
    zeta(2,a)/z^2 + I*/z + (Log(Az) + psi(a) + gamma)/(2z) - B_1(a)/12.

    Errors at the precision floor (relative 2^(noise_bits - prec)) are excluded
    from the slope fit; when every error is at the floor the expansion is exact
    to all orders at this a and the check passes.
    """
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    if A <= 0:
        raise ValueError("need A > 0")
    zs = list(zgrid) if zgrid is not None else [0.1 / 2**k for k in range(7)]
    if any(not 0 < z <= 0.3 for z in zs):
        raise ValueError("z must lie in (0, 0.3]")
    with mpmath.workprec(prec):
        am = mpmath.mpf(a.numerator) / a.denominator
        istar = em_istar(A, prec)
        rows = []
        for z in zs:
            zm = mpmath.mpf(z)
            lhs = _em_lhs(am, zm, prec)
            rhs = _em_rhs(am, mpmath.mpmathify(A), zm, istar, prec, flip_log_sign)
            err = abs(lhs - rhs)
            floor = abs(lhs) * mpmath.mpf(2) ** (noise_bits - prec)
            rows.append({"z": z, "error": float(err), "floor": float(floor), "above_floor": bool(err > floor)})
    above = [r for r in rows if r["above_floor"]]
    slope = loglog_slope([r["z"] for r in above], [r["error"] for r in above]) if len(above) >= 2 else None
    if not above:
        ok = True
    elif len(above) == 1:
        ok = above[0]["z"] == max(zs)
    else:
        ok = slope >= 0.8
    errs = [r["error"] for r in rows]
    ratios = [errs[i] / errs[i + 1] for i in range(len(errs) - 1) if errs[i + 1] > 0]
    return {
        "a": str(a),
        "A": float(A),
        "istar": float(istar),
        "rows": rows,
        "slope": slope,
        "ratios": ratios,
        "flip_log_sign": flip_log_sign,
        "pass": ok,
    }
