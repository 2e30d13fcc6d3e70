import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from thetadist import specfun
from thetadist.errors import DomainError
from thetadist.specfun import (
    SeriesTolerance,
    ZETA2,
    ZETA4,
    csch_complex,
    erf,
    harmonic,
    lambert_w_m1,
    theta2_qderiv_series,
    theta2_zero,
)


def brute_theta2(q, terms=50):
    return 2.0 * q**0.25 * sum(q ** (k * (k + 1)) for k in range(terms))


class TestTheta2Zero:
    def test_zero_at_zero(self):
        assert theta2_zero(0.0) == 0.0

    def test_half_against_partial_sums(self):
        assert theta2_zero(0.5) == pytest.approx(brute_theta2(0.5), rel=1e-15)
        assert theta2_zero(0.5) == pytest.approx(2.12893125051302756, rel=1e-14)

    def test_self_dual_point_vs_laplace_inversion(self):
        # sqrt(pi/x) theta2(0, e^{-pi^2/x}) at x = pi reduces to
        # theta2_zero(e^{-pi}) itself; the inversion oracle pins it.
        want = oracles.cdf_oracle(1.0, math.pi, method="talbot")
        assert theta2_zero(math.exp(-math.pi)) == pytest.approx(want, abs=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            theta2_zero(-1e-12)
        with pytest.raises(DomainError):
            theta2_zero(1.0)

    def test_strictly_increasing(self):
        q = np.linspace(1e-3, 0.995, 100)
        vals = theta2_zero(q)
        assert np.all(np.diff(vals) > 0)

    def test_truncation_64_vs_128_terms(self):
        # the 64-term sum is fully converged up to q ~ 0.992
        q = np.linspace(1e-4, 0.992, 300)
        v64 = theta2_zero(q, SeriesTolerance(1e-15, 64))
        v128 = theta2_zero(q, SeriesTolerance(1e-15, 128))
        assert np.max(np.abs(v64 - v128) / v128) < 1e-14

    def test_truncation_default_vs_512_terms(self):
        q = np.linspace(1e-4, 0.999, 300)
        v = theta2_zero(q)
        v512 = theta2_zero(q, SeriesTolerance(1e-15, 512))
        assert np.max(np.abs(v - v512) / v512) < 1e-14

    @given(st.floats(min_value=0.0, max_value=0.99))
    def test_bounded_below_by_first_term(self, q):
        assert theta2_zero(q) >= 2.0 * q**0.25 * (1.0 - 1e-15)

    def test_mpmath_cross_check(self):
        for q in (0.01, 0.3, 0.7, 0.95, 0.999):
            with mp.workdps(40):
                want = float(2 * mp.mpf(q) ** mp.mpf("0.25")
                             * mp.nsum(lambda k: mp.mpf(q) ** (k * (k + 1)), [0, mp.inf]))
            assert theta2_zero(q) == pytest.approx(want, rel=1e-13)


class TestTheta2QDerivSeries:
    def test_vanishes_at_zero_limit(self):
        q = 1e-10
        assert theta2_qderiv_series(q) == pytest.approx(2.0 * q**1.25, rel=1e-9)

    def test_direct_partial_sum(self):
        q = 0.1
        want = sum(k * (k + 1) * q ** (k * (k + 1) - 0.75) for k in range(1, 40))
        assert theta2_qderiv_series(q) == pytest.approx(want, rel=1e-14)

    def test_derivative_relation_at_high_nome(self):
        # d/dq theta2_zero = theta2_zero/(4q) + 2 * qderiv series
        q, h = 0.9, 1e-7
        fd = (theta2_zero(q + h) - theta2_zero(q - h)) / (2 * h)
        analytic = theta2_zero(q) / (4 * q) + 2.0 * theta2_qderiv_series(q)
        assert fd == pytest.approx(analytic, rel=1e-6)

    def test_domain_errors(self):
        for q in (0.0, -0.5, 1.0):
            with pytest.raises(DomainError):
                theta2_qderiv_series(q)


class TestLambertWm1:
    def test_branch_point(self):
        assert lambert_w_m1(-1.0 / math.e) == pytest.approx(-1.0, abs=1e-10)

    def test_known_value(self):
        w = lambert_w_m1(-0.1)
        assert w == pytest.approx(-3.57715206395729714, rel=1e-13)

    def test_against_bisection_oracle(self):
        # w e^w decreases from 0- to -1/e as w runs over [-60, -1]
        for y in (-0.05, -0.2, -0.35, -1e-4):
            lo, hi = -60.0, -1.0
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if mid * math.exp(mid) > y:
                    lo = mid
                else:
                    hi = mid
            assert lambert_w_m1(y) == pytest.approx(0.5 * (lo + hi), rel=1e-12)

    def test_residual_over_log_spaced_grid(self):
        ys = -np.geomspace(1e-12, 1.0 / math.e - 1e-16, 1000)
        for y in ys:
            w = lambert_w_m1(y)
            assert w <= -1.0
            assert abs(w * math.exp(w) - y) < 1e-12 * abs(y)

    def test_near_branch_point(self):
        y = -1.0 / math.e + 1e-13
        w = lambert_w_m1(y)
        assert abs(w * math.exp(w) - y) < 1e-12 * abs(y)

    def test_domain_errors(self):
        for y in (0.0, 0.5, -0.37, -1.0):
            with pytest.raises(DomainError):
                lambert_w_m1(y)

    @given(st.floats(min_value=-0.36, max_value=-1e-6))
    @settings(max_examples=200)
    def test_residual_property(self, y):
        w = lambert_w_m1(y)
        assert w <= -1.0
        assert abs(w * math.exp(w) - y) < 1e-12 * abs(y)


class TestCschComplex:
    def test_real_axis_reduction(self):
        for t in (0.5, 1.0, 3.0):
            v = csch_complex(t)
            assert v.imag == 0.0
            assert v.real == pytest.approx(1.0 / math.sinh(t), rel=1e-15)

    def test_quarter_period(self):
        assert csch_complex(1j * math.pi / 2) == pytest.approx(-1j, abs=1e-15)

    def test_generic_point_vs_mpmath(self):
        with mp.workdps(40):
            want = complex(1 / mp.sinh(mp.mpc(1, 1)))
        assert csch_complex(1 + 1j) == pytest.approx(want, rel=1e-14)

    def test_poles_raise(self):
        for z in (0.0, 1j * math.pi, -2j * math.pi):
            with pytest.raises(DomainError):
                csch_complex(z)

    def test_large_real_part(self):
        v = csch_complex(400 + 3j)
        with mp.workdps(60):
            want = complex(1 / mp.sinh(mp.mpc(400, 3)))
        assert v == pytest.approx(want, rel=1e-12)
        assert csch_complex(800.0) == 0.0  # graceful underflow

    @given(st.complex_numbers(min_magnitude=1e-3, max_magnitude=50,
                              allow_nan=False, allow_infinity=False))
    @settings(max_examples=200)
    def test_conjugate_symmetry(self, z):
        if z.real == 0.0:
            return  # pole line handled separately
        a = csch_complex(z.conjugate())
        b = csch_complex(z).conjugate()
        assert a == pytest.approx(b, rel=1e-12)


class TestHarmonic:
    def test_small_values(self):
        assert harmonic(1, 1) == 1.0
        assert harmonic(4, 1) == pytest.approx(25.0 / 12.0, rel=1e-15)
        assert harmonic(3, 2) == pytest.approx(49.0 / 36.0, rel=1e-15)

    def test_second_order_approaches_zeta2(self):
        h = harmonic(10**6, 2)
        assert h < ZETA2
        assert abs(h - ZETA2) < 1.1e-6

    def test_monotone_in_t(self):
        vals = [harmonic(t, 2) for t in (10, 100, 1000)]
        assert vals[0] < vals[1] < vals[2] < ZETA2

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            harmonic(0, 1)
        with pytest.raises(DomainError):
            harmonic(5, 3)


class TestErf:
    def test_zero(self):
        assert erf(0.0) == 0.0

    def test_limit(self):
        assert erf(6.0) > 1.0 - 1e-15

    def test_unit_value_vs_series(self):
        assert erf(1.0) == pytest.approx(0.8427007929497149, abs=1e-16)
        assert erf(1.0) == pytest.approx(oracles.erf_series(1.0), abs=1e-15)

    def test_grid_vs_series_oracle(self):
        for x in np.linspace(-3, 3, 25):
            assert erf(float(x)) == pytest.approx(oracles.erf_series(x), abs=1e-14)

    def test_array_input(self):
        x = np.array([0.0, 1.0, -1.0])
        v = erf(x)
        assert v.shape == (3,)
        assert v[1] == -v[2]


def test_zeta_constants():
    assert ZETA2 == pytest.approx(math.pi**2 / 6.0, rel=0)
    assert ZETA4 == pytest.approx(math.pi**4 / 90.0, rel=0)


def test_series_tolerance_validation():
    with pytest.raises(DomainError):
        SeriesTolerance(abs_tol=-1.0)
    with pytest.raises(DomainError):
        SeriesTolerance(max_terms=0)
