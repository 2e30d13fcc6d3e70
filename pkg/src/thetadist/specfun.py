"""Scalar special-function kernels.

Everything here is a pure function: the theta series and its q-derivative
series, the lower real branch of Lambert W, the complex hyperbolic
cosecant, harmonic numbers, the error function, and the zeta constants
zeta(2), zeta(4) used by the distribution's moment formulas.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erf as _erf_arr

from .errors import ConvergenceError, DomainError

#: zeta(2) and zeta(4) in closed form; no general zeta evaluator is needed.
ZETA2 = math.pi**2 / 6.0
ZETA4 = math.pi**4 / 90.0

_INV_E = math.exp(-1.0)


@dataclass(frozen=True)
class SeriesTolerance:
    """Truncation policy for the theta series.

    ``abs_tol`` drops terms once their magnitude falls below it;
    ``max_terms`` is the hard cap.  The series exponents grow like
    k(k+1), so 256 terms cover any q <= 0.999 at 1e-15 (the tail past
    k terms is O(q^(k^2)); 64 terms are only enough up to q ~ 0.993).
    """

    abs_tol: float = 1e-15
    max_terms: int = 256

    def __post_init__(self):
        if not (self.abs_tol >= 0.0):
            raise DomainError(f"abs_tol must be >= 0, got {self.abs_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_TOLERANCE = SeriesTolerance()


def _as_array(x):
    arr = np.asarray(x, dtype=np.float64)
    return arr, (arr.ndim == 0)


def theta2_zero(q, tol: SeriesTolerance = DEFAULT_TOLERANCE):
    """Jacobi theta_2 at z = 0:  2 q^{1/4} sum_{k>=0} q^{k(k+1)}.

    Accepts a scalar or array q in [0, 1).  Terms are added until their
    magnitude drops below ``tol.abs_tol`` or ``tol.max_terms`` is hit.
    """
    arr, scalar = _as_array(q)
    if np.any(arr < 0.0) or np.any(arr >= 1.0):
        raise DomainError("theta2_zero requires 0 <= q < 1")
    q2 = arr * arr
    s = np.ones_like(arr)
    term = np.ones_like(arr)
    fac = q2.copy()
    for _ in range(1, tol.max_terms):
        term = term * fac        # q^{k(k+1)}
        fac = fac * q2           # ratio to the next term is q^{2k}
        term = np.where(term < tol.abs_tol, 0.0, term)
        if not term.any():
            break
        s = s + term
    out = 2.0 * arr**0.25 * s
    return float(out) if scalar else out


def theta2_qderiv_series(q, tol: SeriesTolerance = DEFAULT_TOLERANCE):
    """The q-derivative series sum_{k>=1} k(k+1) q^{k(k+1)-3/4}.

    Satisfies d/dq theta2_zero(q) = theta2_zero(q)/(4q) + 2 * this.
    Scalar or array q in (0, 1).
    """
    arr, scalar = _as_array(q)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise DomainError("theta2_qderiv_series requires 0 < q < 1")
    q2 = arr * arr
    pw = arr**1.25               # q^{k(k+1)-3/4} at k = 1
    fac = q2 * q2                # exponent step 2(k+1), starting at 4
    s = np.zeros_like(arr)
    k = 1
    while k < tol.max_terms:
        term = k * (k + 1) * pw
        term = np.where(term < tol.abs_tol, 0.0, term)
        if not term.any():
            break
        s = s + term
        pw = pw * fac
        fac = fac * q2
        k += 1
    return float(s) if scalar else s


def lambert_w_m1(y):
    """Branch -1 of Lambert W: the solution w <= -1 of w e^w = y.

    Defined for y in [-1/e, 0).  Seeded by the asymptotic
    log(-y) - log(-log(-y)) away from the branch point and by the
    Puiseux expansion w = -1 - s - s^2/3 - 11 s^3/72, s = sqrt(2(1+ey)),
    near it; Halley iteration polishes to ~1e-15 relative residual.
    """
    y = float(y)
    if y >= 0.0 or y < -_INV_E - 4e-17:
        raise DomainError(f"lambert_w_m1 requires -1/e <= y < 0, got {y}")
    d = 1.0 + math.e * y
    if d <= 0.0:
        return -1.0  # branch point (within fp noise of -1/e)
    s = math.sqrt(2.0 * d)
    if s < 0.3:
        w = -1.0 - s - s * s / 3.0 - 11.0 * s**3 / 72.0
        if s < 1e-4:
            return w  # expansion error O(s^4) is far below target here
    else:
        L1 = math.log(-y)
        w = L1 - math.log(-L1)
    for _ in range(60):
        ew = math.exp(w)
        f = w * ew - y
        wp1 = w + 1.0
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if w > -1.0:
            w = -1.0  # iterates must stay on the lower branch
        if abs(dw) <= 5e-16 * (1.0 + abs(w)):
            return w
    raise ConvergenceError(f"lambert_w_m1 did not converge for y={y}")


def csch_complex(z):
    """Complex hyperbolic cosecant 1/sinh(z).

    Raises at the poles z = i k pi (k integer, including 0).  For
    |Re z| > 350 the reflection 2 exp(-|Re| part) is used so the result
    underflows gracefully instead of overflowing sinh.
    """
    z = complex(z)
    if z.real == 0.0:
        k = round(z.imag / math.pi)
        if abs(z.imag - k * math.pi) < 4e-16 * max(1.0, abs(z.imag)):
            raise DomainError(f"csch_complex pole at z = {z!r}")
    if z.real > 350.0:
        return 2.0 * cmath.exp(-z)
    if z.real < -350.0:
        return -2.0 * cmath.exp(z)
    s = cmath.sinh(z)
    if s == 0:
        raise DomainError(f"csch_complex pole at z = {z!r}")
    return 1.0 / s


def harmonic(t, order=1):
    """Harmonic number H_t (order 1) or H_t^{(2)} (order 2), by direct sum."""
    t = int(t)
    if t < 1:
        raise DomainError(f"harmonic requires t >= 1, got {t}")
    if order not in (1, 2):
        raise DomainError(f"harmonic order must be 1 or 2, got {order}")
    x = np.arange(1, t + 1, dtype=np.float64)
    if order == 1:
        return float(np.sum(1.0 / x))
    return float(np.sum(1.0 / (x * x)))


def erf(x):
    """Error function, scalar or array (library-grade accuracy)."""
    if np.ndim(x) == 0:
        return math.erf(float(x))
    return _erf_arr(np.asarray(x, dtype=np.float64))
