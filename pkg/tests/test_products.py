import math
import random
from fractions import Fraction

import mpmath
import pytest

from hookdist.modular import ExactPhase
from hookdist.products import (
    ConeSample,
    F3_asym,
    F_direct,
    binet_integral_check,
    cone_rays,
    digamma_identity_check,
    em_istar,
    eta_transform_check,
    euler_maclaurin_check,
    f2_ratio_study,
    log_F2_asym,
    log_F_direct,
    loglog_slope,
    ratio_study,
)


def test_products_agree_at_xi_one():
    rng = random.Random(1)
    with mpmath.workprec(256):
        for _ in range(5):
            q = mpmath.mpc(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
            vals = [F_direct(w, 1, q) for w in (1, 2, 3)]
            assert abs(vals[0] - vals[1]) < 1e-25 and abs(vals[0] - vals[2]) < 1e-25


def test_products_near_q_zero():
    with mpmath.workprec(128):
        for w in (1, 2, 3):
            assert abs(F_direct(w, ExactPhase.root_of_unity(1, 3), mpmath.mpf("1e-12"), 128) - 1) < 1e-11


def test_f1_at_minus_one():
    with mpmath.workprec(128):
        direct = mpmath.fprod(1 + mpmath.mpf(0.5) ** n for n in range(1, 51))
        assert abs(F_direct(1, -1, mpmath.mpf(0.5), 128) - direct) < 1e-14


def test_float_path_matches_multiprecision():
    xi = ExactPhase.root_of_unity(1, 5)
    q = ("log", mpmath.mpc(-0.05, 0.01))
    for which in (1, 2, 3):
        lo = complex(log_F_direct(which, xi, q, prec=53))
        with mpmath.workprec(128):
            hi = complex(log_F_direct(which, xi, q, prec=128))
        assert abs(lo - hi) < 1e-9 * max(1, abs(hi))


def test_direct_rejects_unit_circle():
    with pytest.raises(ValueError):
        F_direct(1, -1, 1.0)
    with pytest.raises(TypeError):
        F_direct(1, 0.5j, 0.3)


def test_cone_sample_validation():
    assert cone_rays(math.pi / 4) == [0.0, math.pi / 8, -math.pi / 8, math.pi / 4, -math.pi / 4]
    s = ConeSample(math.pi / 4, 0.1, -math.pi / 4)
    assert abs(s.z - 0.1 * complex(math.cos(math.pi / 4), -math.sin(math.pi / 4))) < 1e-15
    for bad in [(math.pi / 2, 0.1, 0.0), (0.5, 0.0, 0.0), (0.5, 0.1, 0.6)]:
        with pytest.raises(ValueError):
            ConeSample(*bad)


def test_loglog_slope():
    xs = [2.0**-k for k in range(6)]
    assert loglog_slope(xs, [3 * x**2 for x in xs]) == pytest.approx(2.0)


@pytest.mark.parametrize("part,b", [(1, 2), (1, 3), (3, 2), (3, 3)])
def test_ratio_study_slopes(part, b):
    rep = ratio_study(part, b)
    assert len(rep["rays"]) == 5
    for ray in rep["rays"]:
        assert ray["monotone"] and 0.8 <= ray["slope"] <= 1.2, ray


def test_f3_prefactor_at_b2():
    # at b = 2 the Gamma(1/2) factor cancels against sqrt(pi); check the whole prefactor by ratio
    z = mpmath.mpf("0.001")
    with mpmath.workprec(128):
        direct = mpmath.exp(log_F_direct(3, -1, ("log", -z), 128))
        assert abs(direct / F3_asym(ExactPhase(Fraction(1, 2)), z, 128) - 1) < 0.01


def test_f2_ratio_converges():
    rep = f2_ratio_study()
    errs = rep["errors"]
    assert rep["pass"]
    assert all(errs[i + 1] < errs[i] for i in range(len(errs) - 1))
    assert errs[-1] < 1e-3


def test_f2_exponent_scales_with_lambda_squared():
    z = mpmath.mpf("0.01")
    with mpmath.workprec(128):
        # k = 1, h = 0: lambda = 1 and the exponent is -pi/(12 b^2 t z)
        e3 = mpmath.re(log_F2_asym(1, 3, 2, 0, 1, z, 128)) - mpmath.log(mpmath.mpf(1) / (2 * 3 * z)) / 2
        e5 = mpmath.re(log_F2_asym(1, 5, 2, 0, 1, z, 128)) - mpmath.log(mpmath.mpf(1) / (2 * 5 * z)) / 2
        assert abs(e3 / e5 - mpmath.mpf(25) / 9) < 1e-30


@pytest.mark.parametrize("h,k,z", [(0, 1, "0.3"), (1, 3, (0.2, 0.1)), (2, 5, "0.15"), (3, 7, (0.4, -0.2))])
def test_eta_transformation(h, k, z):
    zz = mpmath.mpc(*z) if isinstance(z, tuple) else mpmath.mpf(z)
    rep = eta_transform_check(h, k, zz, 256)
    assert rep["pass"] and rep["error"] < 1e-20


@pytest.mark.parametrize("b", [2, 3, 4, 5, 6])
def test_digamma_identity(b):
    assert digamma_identity_check(b)["pass"]


def test_roots_of_unity_sum_to_zero():
    with mpmath.workprec(128):
        for b in (2, 3, 7):
            assert abs(mpmath.fsum(ExactPhase.root_of_unity(j, b).to_complex(128) for j in range(b))) < 1e-30


@pytest.mark.parametrize("N", [1, 2, 5, Fraction(1, 2)])
def test_binet_integral(N):
    rep = binet_integral_check(N)
    assert rep["pass"] and rep["error"] < 1e-12


def test_binet_rejects_nonpositive():
    with pytest.raises(ValueError):
        binet_integral_check(0)


def test_istar_closed_form_at_two():
    with mpmath.workprec(128):
        expect = -mpmath.log(2 * mpmath.pi) / 2 - mpmath.log(2) / 2
        assert abs(em_istar(2) - expect) < 1e-25


def test_istar_at_one_is_binet():
    with mpmath.workprec(128):
        assert abs(em_istar(1) + mpmath.log(2 * mpmath.pi) / 2) < 1e-25


def test_euler_maclaurin_one_third():
    rep = euler_maclaurin_check(Fraction(1, 3), 1)
    assert rep["pass"] and rep["slope"] >= 0.8
    # first-order term vanishes here, so halving z divides the error by about 4
    assert all(3.6 <= r <= 4.4 for r in rep["ratios"])


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(1)])
def test_euler_maclaurin_exact_cases(a):
    rep = euler_maclaurin_check(a, 1)
    assert rep["pass"]


def test_euler_maclaurin_other_A():
    rep = euler_maclaurin_check(Fraction(1, 4), 3)
    assert rep["pass"] and rep["slope"] >= 0.8


def test_euler_maclaurin_negative_control():
    rep = euler_maclaurin_check(Fraction(1, 3), 1, flip_log_sign=True)
    assert not rep["pass"]


def test_euler_maclaurin_guards():
    with pytest.raises(ValueError):
        euler_maclaurin_check(Fraction(3, 2), 1)
    with pytest.raises(ValueError):
        euler_maclaurin_check(Fraction(1, 3), 0)
    with pytest.raises(ValueError):
        euler_maclaurin_check(Fraction(1, 3), 1, zgrid=[0.5])
