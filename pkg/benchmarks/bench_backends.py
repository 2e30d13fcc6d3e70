#!/usr/bin/env python3
"""Benchmark the numba-jitted kernels against the pure-numpy fallback.

Runs each hot kernel on identical inputs under both backends and prints
a timing table.  Invoke from the repository root:

    python3 benchmarks/bench_backends.py            # full sizes
    python3 benchmarks/bench_backends.py --quick    # CI-friendly sizes
"""

import argparse
import math
import time

import numpy as np

from thetadist import _kernels_numpy

try:
    from thetadist import _kernels_numba
except ImportError:
    _kernels_numba = None


def best_of(fn, repeats=3):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(name, make_args, call, repeats):
    rows = []
    for label, mod in (("numpy", _kernels_numpy), ("numba", _kernels_numba)):
        if mod is None:
            rows.append((label, None))
            continue
        call(mod, *make_args())  # warm-up (and JIT compile for numba)
        args = make_args()
        rows.append((label, best_of(lambda: call(mod, *args), repeats)))
    base = rows[0][1]
    print(f"{name:<28}", end="")
    for label, t in rows:
        if t is None:
            print(f"  {label}: unavailable", end="")
        else:
            speed = f" ({base / t:4.1f}x)" if label == "numba" and base else ""
            print(f"  {label}: {t * 1e3:9.2f} ms{speed}", end="")
    print()


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="small sizes")
    args = parser.parse_args(argv)

    n_eval = 200_000 if args.quick else 2_000_000
    n_quant = 20_000 if args.quick else 200_000
    n_samp = 2_000 if args.quick else 20_000
    k_samp = 1_000 if args.quick else 10_000

    grid = np.ascontiguousarray(np.geomspace(1e-2, 50.0, n_eval))
    u = np.ascontiguousarray(np.linspace(0.001, 0.999, n_quant))
    lo = np.full_like(u, 1e-6)
    hi = np.full_like(u, 1e6)

    print(f"backends: numpy vs numba "
          f"({'quick' if args.quick else 'full'} sizes)\n")
    bench(f"cdf_std      n={n_eval:>9,}",
          lambda: (grid,), lambda mod, g: mod.cdf_std(g), repeats=3)
    bench(f"pdf_std      n={n_eval:>9,}",
          lambda: (grid,), lambda mod, g: mod.pdf_std(g), repeats=3)
    bench(f"quantile_std n={n_quant:>9,}",
          lambda: (u, lo, hi), lambda mod, a, b, c: mod.quantile_std(a, b, c, 64),
          repeats=3)
    bench(f"sampler      n={n_samp:,} K={k_samp:,}",
          lambda: (np.random.default_rng(0),),
          lambda mod, g: mod.sample_series(g, n_samp, k_samp, 7.0), repeats=3)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
