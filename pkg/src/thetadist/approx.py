"""Approximations to the Jacobi theta distribution.

Two schemes: the first-order asymptotic CDF/PDF, certified only on
(0, m pi^2/2] and carrying sub-probability total mass 2 sqrt(2/(e pi))
~= 0.968 (it is deliberately not renormalized), and the moment-matched
log-normal surrogate, whose sigma = sqrt(log(7/5)) is independent of m.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfinv

from ._scalar import PI, PI_SQ
from .distribution import ThetaParam, as_theta_param
from .errors import DomainError
from .specfun import erf

__all__ = [
    "ASYMPTOTIC_MASS",
    "LogNormalParams",
    "asymptotic_cdf",
    "asymptotic_pdf",
    "lognormal_match",
    "lognormal_cdf",
    "lognormal_pdf",
    "lognormal_quantile",
    "lognormal_shape_constants",
    "entropy_approx",
]

#: Total mass of the first-order CDF at its domain boundary x = m pi^2/2.
ASYMPTOTIC_MASS = 2.0 * math.sqrt(2.0 / (math.e * PI))

_SIGMA = math.sqrt(math.log(7.0 / 5.0))


@dataclass(frozen=True)
class LogNormalParams:
    """Log-scale location and spread of the matched log-normal."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not (self.sigma > 0.0):
            raise DomainError(f"sigma must be > 0, got {self.sigma}")


def _check_asymptotic_domain(p: ThetaParam, x):
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 0.0) or np.any(arr > p.m * PI_SQ / 2.0):
        raise DomainError(
            f"asymptotic approximation is certified only on (0, m*pi^2/2] "
            f"= (0, {p.m * PI_SQ / 2.0:.6g}]"
        )
    return arr


def asymptotic_cdf(p, x):
    """First-order CDF 2 sqrt(m pi / x) exp(-m pi^2/(4x)) on (0, m pi^2/2]."""
    p = as_theta_param(p)
    arr = _check_asymptotic_domain(p, x)
    out = 2.0 * np.sqrt(p.m * PI / arr) * np.exp(-p.m * PI_SQ / (4.0 * arr))
    return float(out) if arr.ndim == 0 else out


def asymptotic_pdf(p, x):
    """Derivative of ``asymptotic_cdf``; vanishes at the boundary x = m pi^2/2."""
    p = as_theta_param(p)
    arr = _check_asymptotic_domain(p, x)
    out = (
        math.sqrt(PI)
        * np.exp(-PI_SQ * p.m / (4.0 * arr))
        * (PI_SQ * p.m - 2.0 * arr)
        * np.sqrt(p.m / arr)
        / (2.0 * arr * arr)
    )
    return float(out) if arr.ndim == 0 else out


def lognormal_match(p) -> LogNormalParams:
    """Log-normal with the distribution's exact first two moments.

    mu = log((1/6) sqrt(5/7) pi^2 m), sigma = sqrt(log(7/5)); then
    exp(mu + sigma^2/2) = m pi^2/6 and the variance matches m^2 pi^4/90.
    """
    p = as_theta_param(p)
    return LogNormalParams(mu=math.log(PI_SQ * p.m / 6.0 * math.sqrt(5.0 / 7.0)),
                           sigma=_SIGMA)


def lognormal_cdf(lp: LogNormalParams, x):
    """Log-normal CDF; 0 for x <= 0."""
    arr = np.asarray(x, dtype=np.float64)
    pos = arr > 0.0
    logx = np.log(np.where(pos, arr, 1.0))
    out = np.where(pos, 0.5 * (1.0 + erf((logx - lp.mu) / (lp.sigma * math.sqrt(2.0)))), 0.0)
    return float(out) if arr.ndim == 0 else out


def lognormal_pdf(lp: LogNormalParams, x):
    """Log-normal density; 0 for x <= 0."""
    arr = np.asarray(x, dtype=np.float64)
    pos = arr > 0.0
    xs = np.where(pos, arr, 1.0)
    z = (np.log(xs) - lp.mu) / lp.sigma
    out = np.where(pos, np.exp(-0.5 * z * z) / (xs * lp.sigma * math.sqrt(2.0 * PI)), 0.0)
    return float(out) if arr.ndim == 0 else out


def lognormal_quantile(lp: LogNormalParams, u):
    """Log-normal inverse CDF, exp(mu + sigma sqrt(2) erfinv(2u - 1))."""
    arr = np.asarray(u, dtype=np.float64)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError("lognormal_quantile requires 0 < u < 1")
    out = np.exp(lp.mu + lp.sigma * math.sqrt(2.0) * erfinv(2.0 * arr - 1.0))
    return float(out) if arr.ndim == 0 else out


def lognormal_shape_constants():
    """(skewness, kurtosis) of the surrogate: 17 sqrt(2/5)/5 and 7631/625.

    Both larger than the exact distribution's 4 sqrt(10)/7 ~= 1.81 and
    57/7 ~= 8.14: the surrogate matches moments only to order two.
    """
    return 17.0 * math.sqrt(2.0 / 5.0) / 5.0, 7631.0 / 625.0


def entropy_approx(p):
    """Differential entropy of the matched log-normal, in bits.

    log2(sigma sqrt(2 pi) exp(mu + 1/2)); grows by exactly one bit per
    doubling of m.
    """
    lp = lognormal_match(p)
    return (lp.mu + 0.5 + math.log(lp.sigma * math.sqrt(2.0 * PI))) / math.log(2.0)
