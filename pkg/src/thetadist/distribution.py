"""The Jacobi theta distribution.

Law of the random series sum_{k>=1} W_k / k^2 with i.i.d. exponential
weights of mean m > 0: a continuous, unimodal, positively skewed law on
the positive reals with Laplace transform

    E exp(-a X) = sqrt(a m) pi csch(sqrt(a m) pi).

The family is closed under scaling (X_m = m X_1 in distribution), so all
evaluations reduce to the standard m = 1 curve; the CDF is the ground
truth and the density is its exact analytic derivative.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfinv

from ._backend import kernels
from ._scalar import PI, PI_SQ
from .errors import ConsistencyError, ConvergenceError, DomainError
from .specfun import ZETA2, ZETA4

__all__ = [
    "ThetaParam",
    "DistributionStats",
    "cdf",
    "pdf",
    "quantile",
    "laplace_transform",
    "mgf",
    "spectrum_magnitude_sq",
    "spectrum_phase",
    "stats",
    "moment_upper_bound",
]

_QUANTILE_ITERS = 64
_LN_SIGMA = math.sqrt(math.log(7.0 / 5.0))
_LN_MU_STD = math.log(PI_SQ / 6.0 * math.sqrt(5.0 / 7.0))  # log-normal mu at m = 1


@dataclass(frozen=True)
class ThetaParam:
    """Distribution parameter: the common mean m > 0 of the exponential weights."""

    m: float

    def __post_init__(self):
        m = float(self.m)
        if not (math.isfinite(m) and m > 0.0):
            raise DomainError(f"ThetaParam requires finite m > 0, got {self.m!r}")
        object.__setattr__(self, "m", m)


@dataclass(frozen=True)
class DistributionStats:
    """Closed-form moments; skewness, kurtosis and SNR do not depend on m."""

    mean: float
    variance: float
    second_moment: float
    skewness: float
    kurtosis: float
    snr: float


def as_theta_param(p) -> ThetaParam:
    """Coerce a ThetaParam or bare positive number to ThetaParam."""
    if isinstance(p, ThetaParam):
        return p
    return ThetaParam(float(p))


def _eval_std(kernel_fn, x, m):
    """Evaluate a standard-curve kernel at x/m, preserving scalar-ness."""
    arr = np.asarray(x, dtype=np.float64)
    scalar = arr.ndim == 0
    y = np.ascontiguousarray(arr.ravel() / m)
    out = kernel_fn(y)
    return out, arr, scalar


def cdf(p, x):
    """P(X <= x).  Scalar or array x; 0 for x <= 0.

    Values may exceed 1 by at most 1e-12 of floating-point overshoot
    (clamped); anything larger raises ConsistencyError.
    """
    p = as_theta_param(p)
    out, arr, scalar = _eval_std(kernels.cdf_std, x, p.m)
    over = out - 1.0
    if np.any(over > 1e-12):
        raise ConsistencyError(f"cdf overshoot {float(np.max(over)):.3e} exceeds 1e-12")
    np.minimum(out, 1.0, out=out)
    return float(out[0]) if scalar else out.reshape(arr.shape)


def pdf(p, x):
    """Density dP/dx, the analytic derivative of ``cdf``.  0 for x <= 0."""
    p = as_theta_param(p)
    out, arr, scalar = _eval_std(kernels.pdf_std, x, p.m)
    if np.any(out < -1e-12):
        raise ConsistencyError(f"pdf fell below -1e-12: {float(np.min(out)):.3e}")
    np.maximum(out, 0.0, out=out)
    out /= p.m
    return float(out[0]) if scalar else out.reshape(arr.shape)


def _lognormal_quantile_std(u):
    """Quantile of the moment-matched log-normal for m = 1 (bracket seed)."""
    return np.exp(_LN_MU_STD + _LN_SIGMA * math.sqrt(2.0) * erfinv(2.0 * u - 1.0))


def _quantile_std_array(u):
    """Standard-curve (m = 1) quantiles for an array of u in (0, 1)."""
    u = np.ascontiguousarray(u, dtype=np.float64)
    seed = _lognormal_quantile_std(u)
    lo = np.ascontiguousarray(seed * 1e-6)
    hi = np.ascontiguousarray(seed * 1e6)
    return kernels.quantile_std(u, lo, hi, _QUANTILE_ITERS)


@functools.lru_cache(maxsize=1024)
def _quantile_std(u: float) -> float:
    return float(_quantile_std_array(np.array([u]))[0])


def quantile(p, u):
    """Inverse CDF: the x > 0 with cdf(p, x) = u, for u in (0, 1).

    Solved on the standard curve by log-space bisection from a bracket
    seeded at the log-normal approximation's quantile, then rescaled by
    m; the result satisfies |cdf(p, x) - u| < 1e-10.
    """
    p = as_theta_param(p)
    u = float(u)
    if not (0.0 < u < 1.0):
        raise DomainError(f"quantile requires 0 < u < 1, got {u}")
    x = p.m * _quantile_std(u)
    if abs(cdf(p, x) - u) >= 1e-10:
        raise ConvergenceError(f"quantile failed its tolerance at u={u}")
    return x


def laplace_transform(p, alpha):
    """E exp(-alpha X) = z/sinh(z) with z = pi sqrt(alpha m); alpha >= 0."""
    p = as_theta_param(p)
    arr = np.asarray(alpha, dtype=np.float64)
    if np.any(arr < 0.0):
        raise DomainError("laplace_transform requires alpha >= 0")
    z = PI * np.sqrt(arr * p.m)
    out = np.ones_like(z)
    mid = (z > 0.0) & (z <= 700.0)
    out = np.where(mid, np.divide(z, np.sinh(np.where(mid, z, 1.0))), out)
    big = z > 700.0
    if np.any(big):
        zb = np.where(big, z, 1.0)
        out = np.where(big, 2.0 * zb * np.exp(-zb), out)
    return float(out) if arr.ndim == 0 else out


def mgf(p, t):
    """Moment generating function E exp(t X), finite for t < 1/m.

    For t in (0, 1/m) this is the analytic continuation
    sqrt(t m) pi csc(sqrt(t m) pi), which diverges as t approaches 1/m
    (the k = 1 weight alone is Exponential(m)); t >= 1/m raises.
    """
    p = as_theta_param(p)
    arr = np.asarray(t, dtype=np.float64)
    if np.any(arr >= 1.0 / p.m):
        raise DomainError(f"mgf requires t < 1/m = {1.0 / p.m}")
    out = np.ones_like(arr)
    neg = arr < 0.0
    if np.any(neg):
        out = np.where(neg, laplace_transform(p, np.where(neg, -arr, 0.0)), out)
    pos = arr > 0.0
    if np.any(pos):
        s = PI * np.sqrt(np.where(pos, arr, 0.25) * p.m)
        out = np.where(pos, s / np.sin(s), out)
    return float(out) if arr.ndim == 0 else out


def spectrum_magnitude_sq(p, omega):
    """|C(omega)|^2 for the spectrum C(omega) = E exp(i omega X).

    Equals |omega| m pi^2 / |sinh((1+i) r)|^2 with r = pi sqrt(|omega| m / 2);
    |sinh((1+i)r)|^2 = sinh(r)^2 + sin(r)^2 keeps everything real.
    Value 1 at omega = 0 and even in omega.
    """
    p = as_theta_param(p)
    arr = np.asarray(omega, dtype=np.float64)
    a = np.abs(arr)
    r = PI * np.sqrt(a * p.m / 2.0)
    out = np.ones_like(r)
    mid = (r > 0.0) & (r <= 350.0)
    rm = np.where(mid, r, 1.0)
    out = np.where(mid, a * p.m * PI_SQ / (np.sinh(rm) ** 2 + np.sin(rm) ** 2), out)
    big = r > 350.0
    if np.any(big):
        rb = np.where(big, r, 1.0)
        out = np.where(big, 4.0 * a * p.m * PI_SQ * np.exp(-2.0 * rb), out)
    return float(out) if arr.ndim == 0 else out


def spectrum_phase(p, omega):
    """Phase arctan(Im C / Re C) of the spectrum, odd in omega, 0 at 0."""
    p = as_theta_param(p)
    arr = np.asarray(omega, dtype=np.float64)
    a = np.abs(arr)
    r = PI * np.sqrt(a * p.m / 2.0)
    # C = z/sinh(z), z = (1 -+ i) r for omega >< 0; phase needs only
    # arg z - arg sinh(z), evaluated without forming the huge sinh.
    rs = np.where(r > 0.0, r, 1.0)
    arg_sinh = np.where(
        r <= 700.0,
        np.arctan2(np.cosh(np.minimum(rs, 700.0)) * np.sin(-rs),
                   np.sinh(np.minimum(rs, 700.0)) * np.cos(rs)),
        np.arctan2(np.sin(-rs), np.cos(rs)),
    )
    theta = -PI / 4.0 - arg_sinh
    out = np.where(r > 0.0, np.arctan(np.tan(theta)), 0.0)
    out = np.where(arr < 0.0, -out, out)
    return float(out) if arr.ndim == 0 else out


def stats(p) -> DistributionStats:
    """Closed-form mean, variance, second moment, skewness, kurtosis, SNR."""
    p = as_theta_param(p)
    m = p.m
    return DistributionStats(
        mean=m * ZETA2,
        variance=m * m * ZETA4,
        second_moment=7.0 * m * m * PI**4 / 180.0,
        skewness=4.0 * math.sqrt(10.0) / 7.0,
        kurtosis=57.0 / 7.0,
        snr=math.sqrt(5.0 / 2.0),
    )


def moment_upper_bound(p, n):
    """Upper bound n! (m zeta(2))^n on E X^n (not the moment itself)."""
    p = as_theta_param(p)
    n = int(n)
    if n < 1:
        raise DomainError(f"moment_upper_bound requires n >= 1, got {n}")
    try:
        val = float(math.factorial(n)) * (p.m * ZETA2) ** n
    except OverflowError:
        raise OverflowError(f"moment bound overflows float range at n={n}") from None
    if math.isinf(val):
        raise OverflowError(f"moment bound overflows float range at n={n}")
    return val
