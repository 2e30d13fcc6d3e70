"""Exception types shared across the package."""


class ThetaDistError(Exception):
    """Base class for all package errors."""


class DomainError(ThetaDistError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(ThetaDistError, RuntimeError):
    """An iterative method failed to reach its tolerance."""


class ConsistencyError(ThetaDistError, RuntimeError):
    """An internal numerical invariant was violated (e.g. a CDF value
    overshooting 1 by more than floating-point noise allows)."""
