"""Timing comparison of the compiled kernels against the pure-NumPy fallback.

Usage: python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from qdephase import _core_py

try:
    from qdephase import _core
except ImportError:
    _core = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_beta(backend, t):
    return lambda: backend.beta_grid(t, 1.0, 10.0)


def bench_dbeta(backend, t):
    return lambda: backend.dbeta_grid(t, 1.0, 10.0)


def bench_mc(backend, x0, noise, w_re, w_im):
    return lambda: backend.ou_filtered_sq(x0, noise, 0.995, 0.07, w_re, w_im)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    t = np.linspace(0.0, 50.0, 1_000_000)
    x0 = rng.standard_normal(20_000)
    noise = rng.standard_normal((20_000, 400))
    k = np.arange(401)
    w = np.full(401, 0.005)
    w[0] *= 0.5
    w[-1] *= 0.5
    w_re = w * np.cos(5.0 * 0.005 * k)
    w_im = w * np.sin(5.0 * 0.005 * k)

    cases = [
        ("beta grid (1e6 points)", bench_beta),
        ("dbeta grid (1e6 points)", bench_dbeta),
        ("OU paths |Z|^2 (2e4 x 400)", bench_mc),
    ]
    print(f"{'kernel':<30} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for name, factory in cases:
        if factory is bench_mc:
            py = best_of(factory(_core_py, x0, noise, w_re, w_im), args.repeats)
            cy = (best_of(factory(_core, x0, noise, w_re, w_im), args.repeats)
                  if _core else float("nan"))
        else:
            py = best_of(factory(_core_py, t), args.repeats)
            cy = best_of(factory(_core, t), args.repeats) if _core else float("nan")
        speedup = py / cy if _core else float("nan")
        print(f"{name:<30} {py * 1e3:>10.2f}ms {cy * 1e3:>10.2f}ms {speedup:>8.1f}x")
    if _core is None:
        print("compiled extension unavailable; only the fallback was timed")


if __name__ == "__main__":
    main()
