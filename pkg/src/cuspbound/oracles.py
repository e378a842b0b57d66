"""Slow independent evaluations used to check the closed forms.

Nothing in the main code paths calls these; they exist for the test suite,
``verify`` and anyone who wants a second opinion on a number.
"""
from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .arith import euler_phi, prime_divisors
from .config import get_config
from .hyperbolic import as_point
from .quadrature import panel_nodes, pole_constant, pole_residue
from .specfun import gamma_fn


def _half_line_integral(a: float, b: float, s: float) -> float:
    """int_a^inf (t^2 + b^2)^(-s) dt, via t = b tan(theta)."""
    theta0 = math.atan2(a, b)
    th, w = panel_nodes(np.linspace(theta0, 0.5 * math.pi, 5), 24)
    return b ** (1.0 - 2.0 * s) * float(np.dot(w, np.cos(th) ** (2.0 * s - 2.0)))


def coset_sum_gamma0(z, s: float, N: int, k_max: int = 400, d_factor: int = 4) -> float:
    """E_infty(z, s) for Gamma_0(N) summed over cosets (c, d), c = N k > 0, gcd(c, d) = 1.

    Rows k <= k_max sum |d| <= D = max(200, d_factor c) explicitly and add the
    coprime-density integral beyond D. Rows past k_max are replaced by the
    mean density times the full-line integral.
    """
    if s <= 1:
        raise ValueError("coset sum diverges for s <= 1")
    p = as_point(z)
    x, y = p.x, p.y
    total = [y**s]
    line = math.sqrt(math.pi) * gamma_fn(s - 0.5) / gamma_fn(s)
    for k in range(1, k_max + 1):
        c = N * k
        d_max = max(200, d_factor * c)
        row = float(_kernels.coset_rows(x, y, s, c, 1, d_max)[1])
        dens = euler_phi(c) / c
        edge = d_max + 0.5
        b = c * y
        row += dens * (_half_line_integral(c * x + edge, b, s) + _half_line_integral(edge - c * x, b, s))
        total.append(y**s * row)
    # mean of phi(Nk)/(Nk) over k
    dens = 6.0 / math.pi**2
    for p_ in prime_divisors(N):
        dens *= p_ / (p_ + 1.0)
    k_tail = (k_max + 0.5) ** (2.0 - 2.0 * s) / (2.0 * s - 2.0)
    total.append(y**s * dens * line * (N * y) ** (1.0 - 2.0 * s) * k_tail)
    return math.fsum(total)


def constant_at_pole(f, residue: float) -> tuple[float, float]:
    """Richardson constant term of f at s = 1 on the configured epsilon ladder."""
    cfg = get_config()
    return pole_constant(f, residue, cfg.richardson_kmin, cfg.richardson_kmax)


def residue_at_pole(f) -> tuple[float, float]:
    cfg = get_config()
    return pole_residue(f, cfg.richardson_kmin, cfg.richardson_kmax)


def dirichlet_beta(s: float, terms: int = 200_000) -> float:
    """sum_{k >= 0} (-1)^k (2k + 1)^(-s), with the alternating tail halved."""
    k = np.arange(terms, dtype=float)
    vals = (2.0 * k + 1.0) ** (-s) * np.where(k % 2 == 0, 1.0, -1.0)
    # averaging consecutive partial sums cancels the leading alternating error
    partial = np.cumsum(vals)
    return float(0.5 * (partial[-1] + partial[-2]))
