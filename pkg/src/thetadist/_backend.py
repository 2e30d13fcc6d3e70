"""Kernel backend selection.

The hot numeric kernels (array CDF/PDF, quantile bisection, the series
sampler) exist twice: numba-jitted and pure numpy.  The environment
variable ``THETADIST_BACKEND`` picks one at import time:

    auto   use numba when importable, else numpy (default)
    numba  require numba, raise if unavailable
    numpy  force the pure-numpy fallback

``benchmarks/bench_backends.py`` times the two side by side.
"""

import os

from . import _kernels_numpy

_choice = os.environ.get("THETADIST_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"THETADIST_BACKEND={_choice!r}: expected 'auto', 'numba' or 'numpy'"
    )

if _choice == "numpy":
    kernels = _kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba

        kernels = _kernels_numba
        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise RuntimeError(
                "THETADIST_BACKEND=numba but numba is not importable"
            ) from None
        kernels = _kernels_numpy
        BACKEND = "numpy"


def backend_name():
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return BACKEND
