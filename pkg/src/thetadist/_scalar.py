"""Scalar kernels for the standard (m = 1) distribution curve.

Plain-Python ``math`` functions with no numpy dependency so the numba
backend can jit them unchanged; the numpy backend vectorizes the same
expressions.  The evaluation switches representation at y = pi, the
self-dual point of the theta-function modular transformation

    sqrt(pi/y) * theta2(0, exp(-pi^2/y)) = theta4(0, exp(-y))

so both branches run at nome <= exp(-pi) ~= 0.0432 and four or five
series terms already exceed double precision.
"""

import math

PI = math.pi
PI_SQ = PI * PI
SQRT_PI = math.sqrt(PI)


def cdf_std(y):
    """CDF of the standard (m = 1) curve at y."""
    if y <= 0.0:
        return 0.0
    if y <= PI:
        # sqrt(pi/y) * 2 q^{1/4} sum_k q^{k(k+1)},  q = exp(-pi^2/y).
        # q^{1/4} is taken directly from -pi^2/(4y) so the far left tail
        # stays finite down to genuine double-precision underflow.
        t = PI_SQ / y
        e4 = math.exp(-0.25 * t)
        q = math.exp(-t)
        s = 1.0 + q**2 + q**6 + q**12 + q**20
        return 2.0 * math.sqrt(PI / y) * e4 * s
    w = math.exp(-y)
    return 1.0 - 2.0 * w + 2.0 * w**4 - 2.0 * w**9 + 2.0 * w**16 - 2.0 * w**25


def pdf_std(y):
    """Density of the standard (m = 1) curve at y: d/dy of cdf_std."""
    if y <= 0.0:
        return 0.0
    if y <= PI:
        t = PI_SQ / y
        e4 = math.exp(-0.25 * t)
        q = math.exp(-t)
        s = 1.0 + q**2 + q**6 + q**12 + q**20
        sp = 2.0 * q + 6.0 * q**5 + 12.0 * q**11 + 20.0 * q**19
        bracket = PI_SQ * (0.5 * s + 2.0 * q * sp) - y * s
        return SQRT_PI * e4 * bracket / (y * y * math.sqrt(y))
    w = math.exp(-y)
    return 2.0 * (w - 4.0 * w**4 + 9.0 * w**9 - 16.0 * w**16 + 25.0 * w**25)
