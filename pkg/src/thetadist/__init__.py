"""Jacobi theta distribution: exact evaluation, sampling, estimation,
approximations, and inverse-square-field applications."""

from ._backend import backend_name
from .distribution import (
    DistributionStats,
    ThetaParam,
    cdf,
    laplace_transform,
    mgf,
    moment_upper_bound,
    pdf,
    quantile,
    spectrum_magnitude_sq,
    spectrum_phase,
    stats,
)
from .errors import ConsistencyError, ConvergenceError, DomainError, ThetaDistError

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
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
    "ThetaDistError",
    "DomainError",
    "ConvergenceError",
    "ConsistencyError",
]
