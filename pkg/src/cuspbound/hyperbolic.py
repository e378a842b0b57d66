"""Free-space kernels on the upper half-plane.

Points may be given as ``HalfPlanePoint`` or as Python complex numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import get_config
from .quadrature import _legendre, geometric_edges, panel_nodes
from .specfun import digamma, gamma_fn


@dataclass(frozen=True)
class HalfPlanePoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"point must lie in the upper half-plane, got y = {self.y}")

    @classmethod
    def from_complex(cls, z: complex) -> "HalfPlanePoint":
        return cls(float(z.real), float(z.imag))

    def __complex__(self) -> complex:
        return complex(self.x, self.y)


def as_point(z) -> HalfPlanePoint:
    if isinstance(z, HalfPlanePoint):
        return z
    if isinstance(z, (tuple, list)) and len(z) == 2:
        return HalfPlanePoint(float(z[0]), float(z[1]))
    return HalfPlanePoint.from_complex(complex(z))


def point_pair_u(z, w) -> float:
    """u(z, w) = |z - w|^2 / (4 Im z Im w)."""
    z, w = as_point(z), as_point(w)
    return ((z.x - w.x) ** 2 + (z.y - w.y) ** 2) / (4.0 * z.y * w.y)


def hyp_distance(z, w) -> float:
    u = point_pair_u(z, w)
    # arccosh(1 + 2u) = 2 arcsinh(sqrt(u)), stable for small u
    return 2.0 * math.asinh(math.sqrt(u))


def _check_distinct(u: float) -> None:
    if u == 0.0:
        raise ValueError("kernel is singular on the diagonal z = w")


def green_h(z, w) -> float:
    """G_H(z, w) = log(1 + 1/u)."""
    u = point_pair_u(z, w)
    _check_distinct(u)
    return math.log1p(1.0 / u)


def green_h_cross_ratio(z, w) -> float:
    """Same kernel written as -log |(z - w)/(z - conj w)|^2."""
    z, w = complex(as_point(z)), complex(as_point(w))
    if z == w:
        raise ValueError("kernel is singular on the diagonal z = w")
    return -2.0 * math.log(abs((z - w) / (z - w.conjugate())))


def green_h_s(z, w, s: float, tol: float = 1e-16) -> float:
    """Gamma(s)^2/Gamma(2s) u^-s F(s, s; 2s; -1/u) for s >= 1.

    Pfaff's transformation gives (u + 1)^-s F(s, s; 2s; w) with
    w = 1/(1 + u) in (0, 1). Its terms are all positive, so for w <= 0.98
    the series is summed directly; closer to w = 1 the c = a + b logarithmic
    expansion is used, which converges fast there but cancels for larger
    1 - w.
    """
    if s < 1:
        raise ValueError(f"green_h_s needs s >= 1, got {s}")
    u = point_pair_u(z, w)
    _check_distinct(u)
    return _green_s_of_u(u, s, tol)


def _green_s_of_u(u: float, s: float, tol: float = 1e-16) -> float:
    wv = 1.0 / (1.0 + u)
    pref = (1.0 + u) ** (-s)
    if wv <= 0.98:
        coeff = gamma_fn(s) ** 2 / gamma_fn(2 * s)
        total, term, n = 0.0, coeff, 0
        while True:
            total += term
            term *= (s + n) ** 2 / ((2 * s + n) * (n + 1)) * wv
            n += 1
            if abs(term) < tol * abs(total):
                return pref * total
    # 1 - w = u/(1 + u) < 0.02
    one_minus = u / (1.0 + u)
    log_one_minus = math.log(one_minus)
    psi_n1 = -0.57721566490153286060651209008240243  # psi(1)
    psi_sn = digamma(s)
    total, ratio, power, n = 0.0, 1.0, 1.0, 0
    while True:
        term = ratio * ratio * power * (2.0 * psi_n1 - 2.0 * psi_sn - log_one_minus)
        total += term
        if n > 2 and abs(term) < tol * abs(total):
            return pref * total
        ratio *= (s + n) / (n + 1)
        power *= one_minus
        psi_n1 += 1.0 / (n + 1)
        psi_sn += 1.0 / (s + n)
        n += 1


# --- heat kernel ------------------------------------------------------------


def _unit_rule(order: int = 48):
    x, w = _legendre(order)
    return 0.5 * (x + 1.0), 0.5 * w


def heat_kernel_rho(t, rho: float) -> np.ndarray:
    """K_H(t) at hyperbolic distance rho > 0 for an array of times."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    nodes, weights = _unit_rule()
    radial = _kernels.heat_radial(rho, t, nodes, weights)
    pref = math.sqrt(2.0) * np.exp(-t / 4.0 - rho * rho / (4.0 * t)) / (4.0 * math.pi * t) ** 1.5
    return pref * radial


def heat_kernel_h(t: float, z, w) -> float:
    """Heat kernel on H at time t between z and w."""
    if t <= 0:
        raise ValueError(f"heat kernel needs t > 0, got {t}")
    rho = hyp_distance(z, w)
    if rho == 0.0:
        return heat_kernel_diag(t)
    return float(heat_kernel_rho(t, rho)[0])


def heat_kernel_diag(t: float) -> float:
    """(1/2pi) int_0^inf exp(-(r^2 + 1/4) t) r tanh(pi r) dr."""
    if t <= 0:
        raise ValueError(f"heat kernel needs t > 0, got {t}")
    r_max = math.sqrt(60.0 / t)
    # tanh has poles at r = i/2, so unit-width panels keep the rule geometric
    edges = np.linspace(0.0, r_max, max(2, int(math.ceil(r_max)) + 1))
    r, wts = panel_nodes(edges, 16)
    vals = np.exp(-r * r * t) * r * np.tanh(math.pi * r)
    return math.exp(-t / 4.0) * float(np.dot(wts, vals)) / (2.0 * math.pi)


def _heat_time_cutoff(tail_tol: float) -> float:
    # K_diag(t) e^{t/4} decreases, so int_T^inf 4 pi K_H <= 16 pi K_diag(T)
    t = 4.0
    while 16.0 * math.pi * heat_kernel_diag(t) >= tail_tol:
        t *= 1.25
    return t


def resolvent_from_heat(z, w, s: float = 1.0, tail_tol: float | None = None) -> float:
    """4 pi int_0^inf exp(-s(s-1)t) K_H(t; z, w) dt by composite Gauss-Legendre."""
    tail_tol = get_config().quad_tol if tail_tol is None else tail_tol
    rho = hyp_distance(z, w)
    if rho == 0.0:
        raise ValueError("kernel is singular on the diagonal z = w")
    t_end = _heat_time_cutoff(tail_tol)
    t_min = min(rho * rho / 200.0, 0.5)
    small = geometric_edges(t_min, 1.0, 1.5) if t_min < 1.0 else np.array([1.0])
    large = np.arange(1.0, t_end + 2.0, 2.0)
    edges = np.concatenate([small[:-1], large])
    t, wts = panel_nodes(edges, 16)
    vals = heat_kernel_rho(t, rho) * np.exp(-s * (s - 1.0) * t)
    return 4.0 * math.pi * float(np.dot(wts, vals))


def green_from_heat(z, w, tail_tol: float = 1e-8) -> float:
    """G_H(z, w) recomputed as 4 pi times the time integral of the heat kernel."""
    return resolvent_from_heat(z, w, 1.0, tail_tol)


def selberg_local_factor(ell: float, s: float, tol: float = 1e-15) -> float:
    """prod_{n >= 0} (1 - exp(-(s + n) ell)), truncated once the tail is below tol."""
    if ell <= 0 or s <= 0:
        raise ValueError("need ell > 0 and s > 0")
    q = math.exp(-ell)
    out, n = 1.0, 0
    while True:
        x = math.exp(-(s + n) * ell)
        # remaining log-product is about x / (1 - q)
        if x / (1.0 - q) < tol:
            return out
        out *= 1.0 - x
        n += 1
