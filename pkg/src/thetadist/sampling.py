"""Random-variate generation and empirical-distribution utilities.

All samplers take a ``numpy.random.Generator`` (PCG64 via
``numpy.random.default_rng(seed)`` is the pinned algorithm for
reproducible streams).  Uniform draws are taken from the open interval
(0, 1) so logs and quantile lookups never hit an endpoint.  Streams are
deterministic per seed and backend; the numba and numpy backends consume
identical uniforms and differ only by last-ulp libm rounding.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .distribution import _quantile_std_array, as_theta_param, cdf
from .errors import ConvergenceError, DomainError
from .specfun import ZETA2, harmonic

__all__ = [
    "SeriesSamplerConfig",
    "SampleSet",
    "sample_exponential",
    "sample_theta_series",
    "sample_theta_inverse",
    "empirical_cdf",
    "empirical_quantile",
]

_U_FLOOR = 2.0**-53


@dataclass(frozen=True)
class SeriesSamplerConfig:
    """Truncation policy for the series sampler.

    ``truncation_k`` explicit atoms; ``tail_policy`` either ``"drop"`` or
    ``"mean_compensate"`` (add the deterministic tail mean
    m (zeta(2) - H_K^(2)) ~= m/K, the dominant truncation error; the
    neglected tail randomness has sd ~ m/sqrt(3 K^3)).
    """

    truncation_k: int = 10_000
    tail_policy: str = "mean_compensate"

    def __post_init__(self):
        if self.truncation_k < 1:
            raise DomainError(f"truncation_k must be >= 1, got {self.truncation_k}")
        if self.tail_policy not in ("drop", "mean_compensate"):
            raise DomainError(f"unknown tail_policy {self.tail_policy!r}")


DEFAULT_SERIES_CONFIG = SeriesSamplerConfig()


class SampleSet:
    """Ordered collection of positive observations with empirical-CDF access."""

    def __init__(self, values):
        arr = np.asarray(values, dtype=np.float64).ravel()
        if arr.size == 0:
            raise DomainError("SampleSet requires at least one observation")
        if not np.all(np.isfinite(arr) & (arr > 0.0)):
            raise DomainError("SampleSet values must be positive and finite")
        self.values = np.sort(arr)

    @property
    def n(self):
        return self.values.size

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return f"SampleSet(n={self.n}, min={self.values[0]:.6g}, max={self.values[-1]:.6g})"


def sample_exponential(rng, mean, size=None):
    """Exponential variates of the given mean by inverse CDF, -mean*log(U)."""
    if not (mean > 0.0):
        raise DomainError(f"mean must be > 0, got {mean}")
    u = rng.random() if size is None else rng.random(size)
    u = np.maximum(u, _U_FLOOR)
    out = -mean * np.log(u)
    return float(out) if size is None else out


def sample_theta_series(rng, p, cfg=DEFAULT_SERIES_CONFIG, size=None):
    """Draw from the truncated series sum_{x=1..K} W_x/x^2, W_x ~ Exp(mean m).

    With ``tail_policy="mean_compensate"`` the deterministic tail mean is
    added to every variate.  Returns a float when ``size`` is None, else
    an array of ``size`` variates.
    """
    p = as_theta_param(p)
    n = 1 if size is None else int(size)
    out = kernels.sample_series(rng, n, cfg.truncation_k, p.m)
    if cfg.tail_policy == "mean_compensate":
        out += p.m * (ZETA2 - harmonic(cfg.truncation_k, 2))
    return float(out[0]) if size is None else out


def sample_theta_inverse(rng, p, size=None):
    """Exact sampler: quantile(p, U) with U uniform on (0, 1)."""
    p = as_theta_param(p)
    n = 1 if size is None else int(size)
    u = np.maximum(rng.random(n), _U_FLOOR)
    x = p.m * _quantile_std_array(u)
    err = np.max(np.abs(cdf(p, x) - u))
    if err >= 1e-10:
        raise ConvergenceError(f"inverse sampler quantile residual {err:.3e}")
    return float(x[0]) if size is None else x


def empirical_cdf(s: SampleSet, x):
    """Right-continuous empirical distribution function #{X_i <= x}/n."""
    arr = np.asarray(x, dtype=np.float64)
    out = np.searchsorted(s.values, arr, side="right") / s.n
    return float(out) if arr.ndim == 0 else out


def empirical_quantile(s: SampleSet, u):
    """Left-continuous generalized inverse: the ceil(u*n)-th order statistic."""
    u = float(u)
    if not (0.0 < u < 1.0):
        raise DomainError(f"empirical_quantile requires 0 < u < 1, got {u}")
    # snap-down guard: u*n within 1 ulp above an integer means exactly u*n
    k = int(math.ceil(u * s.n - 1e-9))
    k = min(max(k, 1), s.n)
    return float(s.values[k - 1])
