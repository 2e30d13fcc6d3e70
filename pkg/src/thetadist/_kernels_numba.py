"""Numba-jitted implementations of the hot kernels.

Importing this module requires numba; ``_backend`` falls back to
``_kernels_numpy`` when it is missing or disabled.
"""

import math

import numba
import numpy as np

from . import _scalar

cdf_std_scalar = numba.njit(cache=True)(_scalar.cdf_std)
pdf_std_scalar = numba.njit(cache=True)(_scalar.pdf_std)


@numba.njit(cache=True)
def cdf_std(y):
    out = np.empty(y.size)
    for i in range(y.size):
        out[i] = cdf_std_scalar(y[i])
    return out


@numba.njit(cache=True)
def pdf_std(y):
    out = np.empty(y.size)
    for i in range(y.size):
        out[i] = pdf_std_scalar(y[i])
    return out


@numba.njit(cache=True)
def quantile_std(u, lo, hi, iters):
    out = np.empty(u.size)
    for i in range(u.size):
        a = math.log(lo[i])
        b = math.log(hi[i])
        for _ in range(iters):
            mid = 0.5 * (a + b)
            if cdf_std_scalar(math.exp(mid)) < u[i]:
                a = mid
            else:
                b = mid
        out[i] = math.exp(0.5 * (a + b))
    return out


@numba.njit(cache=True)
def sample_series(gen, n, k_atoms, mean):
    out = np.empty(n)
    for i in range(n):
        acc = 0.0
        for x in range(1, k_atoms + 1):
            u = gen.random()
            if u == 0.0:
                u = 2.0**-53
            acc += math.log(u) / (float(x) * float(x))
        out[i] = -mean * acc
    return out
