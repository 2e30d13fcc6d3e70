import math

import numpy as np
import pytest

import oracles
from thetadist import DomainError, ThetaParam, cdf, quantile, stats
from thetadist.sampling import (
    SampleSet,
    SeriesSamplerConfig,
    empirical_cdf,
    empirical_quantile,
    sample_exponential,
    sample_theta_inverse,
    sample_theta_series,
)
from thetadist.specfun import ZETA2, ZETA4, harmonic

P1 = ThetaParam(1.0)
P7 = ThetaParam(7.0)


def ks_against_cdf(values, cdf_fn):
    v = np.sort(values)
    return oracles.ks_statistic(v, cdf_fn(v))


def ks_two_sample(a, b):
    data = np.concatenate([np.sort(a), np.sort(b)])
    order = np.argsort(data, kind="mergesort")
    from_a = (order < len(a)).astype(float)
    ecdf_a = np.cumsum(from_a) / len(a)
    ecdf_b = np.cumsum(1.0 - from_a) / len(b)
    return float(np.max(np.abs(ecdf_a - ecdf_b)))


class TestSampleExponential:
    def test_mean_clt_band(self):
        rng = np.random.default_rng(1)
        xs = sample_exponential(rng, 2.0, size=1_000_000)
        assert abs(xs.mean() - 2.0) < 3.0 * 2.0 / 1000.0

    def test_positive(self):
        rng = np.random.default_rng(2)
        xs = sample_exponential(rng, 1.0, size=100_000)
        assert np.all(xs > 0.0)

    def test_zero_uniform_edge(self):
        class ZeroRng:
            def random(self, size=None):
                return 0.0 if size is None else np.zeros(size)

        v = sample_exponential(ZeroRng(), 1.0)
        assert 0.0 < v < math.inf  # u = 0 is remapped inside (0, 1)

    def test_deterministic(self):
        a = sample_exponential(np.random.default_rng(42), 3.0, size=1000)
        b = sample_exponential(np.random.default_rng(42), 3.0, size=1000)
        assert np.array_equal(a, b)

    def test_domain(self):
        with pytest.raises(DomainError):
            sample_exponential(np.random.default_rng(0), 0.0)


class TestSeriesSampler:
    def test_single_atom_is_exponential(self):
        rng = np.random.default_rng(3)
        cfg = SeriesSamplerConfig(truncation_k=1, tail_policy="drop")
        xs = sample_theta_series(rng, ThetaParam(2.0), cfg, size=100_000)
        d = ks_against_cdf(xs, lambda v: 1.0 - np.exp(-v / 2.0))
        assert d < oracles.ks_critical(len(xs), alpha=0.01)

    def test_moments(self):
        rng = np.random.default_rng(4)
        cfg = SeriesSamplerConfig(truncation_k=1000, tail_policy="mean_compensate")
        xs = sample_theta_series(rng, P7, cfg, size=100_000)
        s = stats(P7)
        assert xs.mean() == pytest.approx(s.mean, rel=0.005)
        assert xs.var(ddof=1) == pytest.approx(s.variance, rel=0.02)

    def test_drop_vs_compensate_offset(self):
        k = 1000
        a = sample_theta_series(np.random.default_rng(5), P7,
                                SeriesSamplerConfig(k, "drop"), size=500)
        b = sample_theta_series(np.random.default_rng(5), P7,
                                SeriesSamplerConfig(k, "mean_compensate"), size=500)
        offset = 7.0 * (ZETA2 - harmonic(k, 2))
        assert np.allclose(b - a, offset, rtol=1e-9)
        assert offset == pytest.approx(7.0e-3, rel=0.01)  # ~ m/K

    def test_ks_against_exact_cdf(self):
        rng = np.random.default_rng(6)
        cfg = SeriesSamplerConfig(truncation_k=1000, tail_policy="mean_compensate")
        xs = sample_theta_series(rng, P1, cfg, size=50_000)
        d = ks_against_cdf(xs, lambda v: cdf(P1, v))
        assert d < 1.95 / math.sqrt(len(xs))

    def test_scale_family_exact_coupling(self):
        a = sample_theta_series(np.random.default_rng(7), P7, size=200)
        b = sample_theta_series(np.random.default_rng(7), P1, size=200)
        assert np.allclose(a, 7.0 * b, rtol=1e-14)

    def test_scale_family_distributional(self):
        xs7 = sample_theta_series(np.random.default_rng(8), P7,
                                  SeriesSamplerConfig(1000), size=30_000) / 7.0
        xs1 = sample_theta_series(np.random.default_rng(9), P1,
                                  SeriesSamplerConfig(1000), size=30_000)
        d = ks_two_sample(xs7, xs1)
        assert d < oracles.ks_critical_two_sample(len(xs7), len(xs1), alpha=0.01)

    def test_deterministic(self):
        a = sample_theta_series(np.random.default_rng(10), P7, size=100)
        b = sample_theta_series(np.random.default_rng(10), P7, size=100)
        assert np.array_equal(a, b)

    def test_truncated_sums_nondecreasing_in_k(self):
        # couple the weights: partial sums of positive terms grow with K
        rng = np.random.default_rng(11)
        w = sample_exponential(rng, 7.0, size=10_000)
        terms = w / np.arange(1, len(w) + 1) ** 2
        partial = np.cumsum(terms)
        assert np.all(np.diff(partial) >= 0.0)

    def test_variance_deficit_of_truncation(self):
        # Var(sum_{x>K} W_x/x^2) = m^2 (zeta(4) - H_K^(4)) < m^2/(3 K^3);
        # the increment from K=10 to K=100 carries the difference exactly
        for k in (10, 100):
            x = np.arange(1, k + 1, dtype=float)
            tail = ZETA4 - np.sum(1.0 / x**4)
            assert 0.0 < tail < 1.0 / (3.0 * k**3)
        rng = np.random.default_rng(12)
        n = 200_000
        u = rng.random((n, 90))
        xs = np.arange(11, 101, dtype=float)
        inc = (-7.0 * np.log(np.maximum(u, 2.0**-53))) @ (1.0 / xs**2)
        want = 49.0 * (np.sum(1.0 / np.arange(11, 101) ** 4))
        assert inc.var(ddof=1) == pytest.approx(want, rel=0.05)

    def test_scalar_draw(self):
        v = sample_theta_series(np.random.default_rng(0), P7)
        assert isinstance(v, float) and v > 0.0

    def test_config_validation(self):
        with pytest.raises(DomainError):
            SeriesSamplerConfig(truncation_k=0)
        with pytest.raises(DomainError):
            SeriesSamplerConfig(tail_policy="fold")


class TestInverseSampler:
    def test_two_sample_ks_vs_series(self):
        xs_inv = sample_theta_inverse(np.random.default_rng(13), P7, size=30_000)
        xs_ser = sample_theta_series(np.random.default_rng(14), P7,
                                     SeriesSamplerConfig(1000), size=30_000)
        d = ks_two_sample(xs_inv, xs_ser)
        assert d < oracles.ks_critical_two_sample(len(xs_inv), len(xs_ser), alpha=0.01)

    def test_empirical_cdf_at_median(self):
        rng = np.random.default_rng(15)
        xs = sample_theta_inverse(rng, P7, size=100_000)
        med = quantile(P7, 0.5)
        frac = np.mean(xs <= med)
        assert abs(frac - 0.5) < 3.0 * math.sqrt(0.25 / len(xs))

    def test_scale_family(self):
        xs7 = sample_theta_inverse(np.random.default_rng(20), P7, size=30_000) / 7.0
        xs1 = sample_theta_inverse(np.random.default_rng(21), P1, size=30_000)
        d = ks_two_sample(xs7, xs1)
        assert d < oracles.ks_critical_two_sample(len(xs7), len(xs1), alpha=0.01)

    def test_deterministic_and_positive(self):
        a = sample_theta_inverse(np.random.default_rng(18), P7, size=500)
        b = sample_theta_inverse(np.random.default_rng(18), P7, size=500)
        assert np.array_equal(a, b)
        assert np.all(a > 0.0)

    def test_scalar_draw(self):
        v = sample_theta_inverse(np.random.default_rng(0), P1)
        assert isinstance(v, float) and v > 0.0


class TestSampleSet:
    def test_sorted_storage(self):
        s = SampleSet([3.0, 1.0, 2.0])
        assert np.array_equal(s.values, [1.0, 2.0, 3.0])
        assert len(s) == 3

    def test_validation(self):
        with pytest.raises(DomainError):
            SampleSet([])
        with pytest.raises(DomainError):
            SampleSet([1.0, -2.0])
        with pytest.raises(DomainError):
            SampleSet([1.0, math.inf])
        with pytest.raises(DomainError):
            SampleSet([0.0])


class TestEmpiricalCdf:
    def test_step_values(self):
        s = SampleSet([1.0, 2.0, 3.0])
        assert empirical_cdf(s, 0.5) == 0.0
        assert empirical_cdf(s, 3.0) == 1.0
        assert empirical_cdf(s, 2.0) == pytest.approx(2.0 / 3.0)
        assert empirical_cdf(s, 2.5) == pytest.approx(2.0 / 3.0)  # right continuity

    def test_array(self):
        s = SampleSet([1.0, 2.0])
        out = empirical_cdf(s, np.array([0.0, 1.0, 5.0]))
        assert np.array_equal(out, [0.0, 0.5, 1.0])


class TestEmpiricalQuantile:
    def test_order_statistic(self):
        s = SampleSet([1.0, 2.0, 3.0, 4.0])
        assert empirical_quantile(s, 0.5) == 2.0
        assert empirical_quantile(s, 0.25) == 1.0
        assert empirical_quantile(s, 0.75) == 3.0
        assert empirical_quantile(s, 0.76) == 4.0

    def test_single_element(self):
        s = SampleSet([5.0])
        for u in (0.01, 0.5, 0.99):
            assert empirical_quantile(s, u) == 5.0

    def test_converges_to_quantile(self):
        rng = np.random.default_rng(19)
        s = SampleSet(sample_theta_inverse(rng, P7, size=1_000_000))
        assert empirical_quantile(s, 0.5) == pytest.approx(quantile(P7, 0.5), rel=0.01)

    def test_domain(self):
        s = SampleSet([1.0])
        with pytest.raises(DomainError):
            empirical_quantile(s, 0.0)
        with pytest.raises(DomainError):
            empirical_quantile(s, 1.0)
