#!/usr/bin/env python3
"""Benchmark the split-step marching kernels: compiled core vs numpy fallback.

Runs the driven-scenario workload (and a few other lattice sizes) through
both backends, reports wall time per step and the speedup, and verifies the
two backends agree to roundoff on the same inputs.

Usage:
    python benchmarks/bench_split.py [--steps N] [--repeats K]
"""
import argparse
import time

import numpy as np

from qlmarket import dft_matrix
from qlmarket._kernels import HAVE_COMPILED, run_split_steps_py

BETA, OMEGA, MU = 0.1, 1e-4, 1.0


def bench(kernel, amps, steps, w_fwd, w_inv, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        start = time.perf_counter()
        out = kernel(amps, 0.0, 0.01, steps, MU, BETA, OMEGA, w_fwd, w_inv)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=48_000,
                        help="steps per run (default: the full 480-minute scenario)")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if HAVE_COMPILED:
        from qlmarket._kernels import _run_split_steps_compiled
    else:
        print("compiled kernel not available; benchmarking the numpy kernel only\n")

    print(f"{'sites':>6} {'steps':>8} {'numpy':>12} {'cython':>12} "
          f"{'speedup':>8} {'max |diff|':>12}")
    for n_sites in (8, 21, 64):
        rng = np.random.default_rng(7)
        amps = rng.normal(size=n_sites) + 1j * rng.normal(size=n_sites)
        amps /= np.linalg.norm(amps)
        w_fwd = dft_matrix(n_sites)
        w_inv = dft_matrix(n_sites, inverse=True)
        steps = args.steps if n_sites == 21 else min(args.steps, 10_000)

        t_py, out_py = bench(run_split_steps_py, amps, steps, w_fwd, w_inv, args.repeats)
        if HAVE_COMPILED:
            t_cy, out_cy = bench(_run_split_steps_compiled, amps, steps, w_fwd, w_inv,
                                 args.repeats)
            diff = float(np.abs(out_py - out_cy).max())
            print(f"{n_sites:>6} {steps:>8} {t_py:>10.3f}s {t_cy:>10.3f}s "
                  f"{t_py / t_cy:>7.1f}x {diff:>12.2e}")
        else:
            print(f"{n_sites:>6} {steps:>8} {t_py:>10.3f}s {'-':>12} {'-':>8} {'-':>12}")


if __name__ == "__main__":
    main()
