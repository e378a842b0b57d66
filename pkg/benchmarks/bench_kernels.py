#!/usr/bin/env python3
"""Time the numpy and numba forms of each hot kernel.

Both forms are imported directly, so the result does not depend on
CUSPBOUND_BACKEND. The first numba call compiles (or loads the on-disk
cache) and is reported separately.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat R]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from cuspbound import _kernels as K
from cuspbound._backend import HAS_NUMBA
from cuspbound.quadrature import _legendre


def _cases():
    nodes, weights = _legendre(48)
    unit_n, unit_w = 0.5 * (nodes + 1.0), 0.5 * weights
    x = np.linspace(0.05, 20.0, 400)
    t = np.geomspace(1e-3, 20.0, 200)
    return [
        ("bessel_k_scaled x400", K.bessel_k_scaled_numpy, K.bessel_k_scaled_numba, (0.5, x, 0.05, 8.0)),
        ("lattice_box_sum m=400", K.lattice_box_sum_numpy, K.lattice_box_sum_numba, (0.3, 1.2, 2.0, 400)),
        ("coset_rows N=6 k=100", K.coset_rows_numpy, K.coset_rows_numba, (0.2, 0.9, 2.0, 6, 100, 2400)),
        ("log_eta_sum 40 terms", K.log_eta_sum_numpy, K.log_eta_sum_numba, (0.1, 0.6, 40)),
        ("elliptic_roots N=9999", K.elliptic_roots_numpy, K.elliptic_roots_numba, (9999,)),
        ("heat_radial t x200", K.heat_radial_numpy, K.heat_radial_numba, (0.7, t, unit_n, unit_w)),
    ]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _same(a, b):
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return a.shape == b.shape and np.allclose(a, b, rtol=1e-12, atol=1e-14)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not HAS_NUMBA:
        print("numba is not installed; nothing to compare")
        return 0
    print(f"{'kernel':<26}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}{'first ms':>10}  agree")
    for name, slow, fast, fargs in _cases():
        t0 = time.perf_counter()
        ref = fast(*fargs)
        first = time.perf_counter() - t0
        ok = _same(slow(*fargs), ref)
        t_np = best_of(slow, fargs, args.repeat)
        t_nb = best_of(fast, fargs, args.repeat)
        print(f"{name:<26}{1e3 * t_np:>10.2f}{1e3 * t_nb:>10.2f}{t_np / t_nb:>9.1f}{1e3 * first:>10.1f}  {ok}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
