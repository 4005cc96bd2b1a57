"""Compare the accelerated and plain-numpy grid kernels.

Runs both code paths of each grid kernel on identical inputs, reports wall
times and the maximum cell disagreement.  The accelerated path is timed
after a warm-up call so compilation cost is reported separately.

Usage:
    python bench/benchmark_backends.py [--size N] [--repeats R]
"""

import argparse
import math
import time

import numpy as np

from entropyne import _kernels
from entropyne._backend import backend_name


def time_fn(fn, args, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def bench_case(name, fast, plain, args, repeats):
    t_compile = time.perf_counter()
    fast(*args)
    t_compile = time.perf_counter() - t_compile
    t_fast, out_fast = time_fn(fast, args, repeats)
    t_plain, out_plain = time_fn(plain, args, repeats)
    with np.errstate(invalid="ignore"):
        diff = np.nanmax(np.abs(out_fast - out_plain))
    print(f"{name:16s} accelerated {t_fast * 1e3:9.3f} ms   "
          f"numpy {t_plain * 1e3:9.3f} ms   speedup {t_plain / t_fast:6.2f}x   "
          f"first-call {t_compile * 1e3:9.3f} ms   max|diff| {diff:.3e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=1000,
                        help="grid points per axis")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    n = args.size
    print(f"active backend: {backend_name()} (set ENTROPYNE_BACKEND to switch)")
    print(f"grid: {n} x {n} cells, best of {args.repeats}")

    thetas = np.linspace(0.0, math.pi, n)
    temps = np.linspace(0.5, 10.0, n)
    nbars = np.linspace(0.2, 10.0, n)

    bench_case("qubit grid",
               _kernels._qubit_grid_numba, _kernels._qubit_grid_numpy,
               (0.5, 0.0, math.sqrt(14.0), thetas, temps), args.repeats)
    bench_case("amplifier grid",
               _kernels._amplifier_grid_numba, _kernels._amplifier_grid_numpy,
               (temps, nbars, 1.0, 0.6, 0.0, 0.0, 0.4), args.repeats)


if __name__ == "__main__":
    main()
