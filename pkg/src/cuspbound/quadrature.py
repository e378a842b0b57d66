"""Composite Gauss-Legendre rules and Richardson extrapolation to a pole."""
from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=32)
def _legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def panel_nodes(edges, order: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of a Gauss-Legendre rule on every panel in ``edges``."""
    edges = np.asarray(edges, dtype=float)
    x, w = _legendre(order)
    a, b = edges[:-1, None], edges[1:, None]
    half = 0.5 * (b - a)
    nodes = (a + b) * 0.5 + half * x
    weights = half * w
    return nodes.ravel(), weights.ravel()


def integrate(f, edges, order: int = 16) -> float:
    """Integrate a vectorized ``f`` over the union of panels ``edges``."""
    nodes, weights = panel_nodes(edges, order)
    return float(np.dot(weights, f(nodes)))


def geometric_edges(lo: float, hi: float, ratio: float = 2.0) -> np.ndarray:
    """Panel edges lo = e_0 < ... < e_k = hi growing by ``ratio``."""
    if not 0 < lo < hi:
        raise ValueError("need 0 < lo < hi")
    k = max(1, int(np.ceil(np.log(hi / lo) / np.log(ratio))))
    return np.geomspace(lo, hi, k + 1)


def richardson_limit(values, steps) -> tuple[float, float]:
    """Extrapolate samples f(h_k) of a function analytic in h to h = 0.

    Neville's scheme on the polynomial in ``h`` through all samples. Returns
    the extrapolated value and the last-column correction as an error proxy.
    """
    h = np.asarray(steps, dtype=float)
    table = [float(v) for v in values]
    if len(table) != len(h) or len(table) < 2:
        raise ValueError("need at least two samples with matching steps")
    n = len(table)
    estimate, error = table[-1], np.inf
    col = list(table)
    for m in range(1, n):
        new = []
        for i in range(n - m):
            hi, hj = h[i], h[i + m]
            new.append((hj * col[i] - hi * col[i + 1]) / (hj - hi))
        error = abs(new[-1] - estimate)
        estimate = new[-1]
        col = new
    return estimate, error


def pole_constant(f, residue: float, kmin: int = 8, kmax: int = 16) -> tuple[float, float]:
    """Constant term of ``f`` at s = 1 given its simple-pole residue.

    Samples ``f(1 + eps) - residue / eps`` at eps = 2**-k, k = kmin..kmax.
    """
    eps = [2.0**-k for k in range(kmin, kmax + 1)]
    vals = [f(1.0 + e) - residue / e for e in eps]
    return richardson_limit(vals, eps)


def pole_residue(f, kmin: int = 8, kmax: int = 16) -> tuple[float, float]:
    """Residue of ``f`` at its simple pole s = 1 via eps * f(1 + eps)."""
    eps = [2.0**-k for k in range(kmin, kmax + 1)]
    vals = [e * f(1.0 + e) for e in eps]
    return richardson_limit(vals, eps)
