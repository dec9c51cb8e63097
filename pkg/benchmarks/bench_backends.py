#!/usr/bin/env python3
"""Benchmark the numba-compiled kernels against the pure NumPy paths.

Usage:
    python benchmarks/bench_backends.py [--descents N] [--samples N]

The jit path is what the package uses by default; setting
LIDSKII_PURE_NUMPY=1 switches every caller to the NumPy implementations
benchmarked here.
"""

import argparse
import time

import numpy as np

from lidskii import _kernels
from lidskii.backend import USING_NUMBA, backend_name
from lidskii.matrices import random_hermitian


def timeit(fn, *args, repeats=3):
    best = np.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_descent(n_descents):
    rng = np.random.default_rng(0)
    d, k = 4, 6
    S = random_hermitian(d, rng)
    S = (S @ S.conj().T).astype(complex)
    a = rng.uniform(0.5, 1.5, k)
    inits = []
    for _ in range(n_descents):
        G0 = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
        G0 *= np.sqrt(a / np.sum(np.abs(G0) ** 2, axis=0))
        inits.append(np.ascontiguousarray(G0))
    args = (a, 20000, 1e-9, 1e-4, 0.5)

    def run(fn):
        itotal = 0
        for G0 in inits:
            _G, trace, _g, _s = fn(S, G0, *args)
            itotal += len(trace)
        return itotal

    rows = []
    if USING_NUMBA:
        run(_kernels.frame_descent_jit)  # compile before timing
        t_jit, iters = timeit(run, _kernels.frame_descent_jit, repeats=2)
        rows.append(("frame_descent", "numba", t_jit, iters))
    t_py, iters = timeit(run, _kernels.frame_descent_py, repeats=2)
    rows.append(("frame_descent", "numpy", t_py, iters))
    return rows


def bench_orbit(n_samples):
    rng = np.random.default_rng(1)
    d = 5
    S = random_hermitian(d, rng).astype(complex)
    mu = np.sort(rng.standard_normal(d))[::-1].astype(complex)
    gaussians = np.ascontiguousarray(
        (rng.standard_normal((n_samples, d, d)) + 1j * rng.standard_normal((n_samples, d, d)))
        / np.sqrt(2)
    )
    rows = []
    if USING_NUMBA:
        _kernels.orbit_spectra_jit(S, mu, gaussians[:8])
        t, _ = timeit(_kernels.orbit_spectra_jit, S, mu, gaussians)
        rows.append(("orbit_spectra", "numba", t, n_samples))
    t, _ = timeit(_kernels._orbit_spectra_numpy, S, mu, gaussians)
    rows.append(("orbit_spectra", "numpy(stacked)", t, n_samples))
    t, _ = timeit(_kernels.psd_spectra_py if not USING_NUMBA else _kernels.psd_spectra_jit, S, 2.0, gaussians)
    rows.append(("psd_spectra", backend_name(), t, n_samples))
    t, _ = timeit(_kernels._psd_spectra_numpy, S, 2.0, gaussians)
    rows.append(("psd_spectra", "numpy(stacked)", t, n_samples))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--descents", type=int, default=40)
    ap.add_argument("--samples", type=int, default=20000)
    args = ap.parse_args()

    print(f"active backend: {backend_name()}")
    rows = bench_descent(args.descents) + bench_orbit(args.samples)
    print(f"{'kernel':<16} {'path':<16} {'best time':>10} {'work':>10}")
    for kernel, path, t, work in rows:
        print(f"{kernel:<16} {path:<16} {t:>9.3f}s {work:>10}")
    if len({r[1] for r in rows if r[0] == 'frame_descent'}) > 1:
        tj = [r[2] for r in rows if r[0] == "frame_descent" and r[1] == "numba"][0]
        tp = [r[2] for r in rows if r[0] == "frame_descent" and r[1] == "numpy"][0]
        print(f"frame_descent speedup: {tp / tj:.1f}x")


if __name__ == "__main__":
    main()
