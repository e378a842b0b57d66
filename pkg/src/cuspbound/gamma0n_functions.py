"""Eisenstein series and Kronecker limit functions of Gamma_0(N) at the cusps 0 and infinity.

Everything is expressed through level-1 values at transformed points, so
the level-N lattice never has to be summed outside the oracle tests.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .arith import divisors, moebius, prime_divisors
from .eisenstein_level1 import eisenstein_fourier, eisenstein_lattice, klf_infty_level1
from .gamma0 import elliptic_points, volume
from .hyperbolic import as_point

PAIR_SUM_TOL = 1e-7


def _level_factor(N: int, s: float) -> float:
    """N^(-s) prod_{p | N} p^(2s)/(p^(2s) - 1)."""
    out = float(N) ** (-s)
    for p in prime_divisors(N):
        out /= 1.0 - float(p) ** (-2.0 * s)
    return out


def _klf_prefactor(N: int) -> Fraction:
    """(1/N) prod_{p | N} p^2/(p^2 - 1)."""
    out = Fraction(1, N)
    for p in prime_divisors(N):
        out *= Fraction(p * p, p * p - 1)
    return out


def klf_level_shift(N: int) -> float:
    """(1/v)(log N - sum_{p | N} log p/(p + 1))."""
    logs = math.log(N) - math.fsum(math.log(p) / (p + 1) for p in prime_divisors(N))
    return logs / volume(N)


def _scaled(z, num: int, den: int) -> complex:
    p = as_point(z)
    return complex(p.x, p.y) * num / den


def eisenstein_infty_gamma0(z, s: float, N: int, cutoff: int | None = None, method: str = "fourier") -> float:
    """E_infty(z, s) for Gamma_0(N) from the level-lowering relation.

    N^(-s) prod_{p|N} p^(2s)/(p^(2s)-1) sum_{d|N} mu(d) d^(-s) E(Nz/d, s); the
    level-1 values come from the Fourier expansion (default) or the lattice.
    """
    if s <= 1:
        raise ValueError(f"s must exceed 1, got {s}")
    if method == "fourier":
        level1 = lambda w: eisenstein_fourier(w, s)  # noqa: E731
    elif method == "lattice":
        level1 = lambda w: eisenstein_lattice(w, s, cutoff)  # noqa: E731
    else:
        raise ValueError(f"unknown level-1 method {method!r}")
    terms = [moebius(d) * float(d) ** (-s) * level1(_scaled(z, N, d)) for d in divisors(N) if moebius(d)]
    return _level_factor(N, s) * math.fsum(terms)


def _klf_divisor_sum(N: int, points) -> float:
    terms = [moebius(d) / d * klf_infty_level1(w) for d, w in points if moebius(d)]
    return float(_klf_prefactor(N)) * math.fsum(terms)


def klf_infty_gamma0(z, N: int) -> float:
    """Kronecker limit function of Gamma_0(N) at the cusp infinity."""
    pts = [(d, _scaled(z, N, d)) for d in divisors(N)]
    return _klf_divisor_sum(N, pts) - klf_level_shift(N)


def fricke(z, N: int) -> complex:
    """z -> -1/(N z)."""
    p = as_point(z)
    return -1.0 / (N * complex(p.x, p.y))


def klf_zero_gamma0(z, N: int, form: str = "fricke") -> float:
    """Kronecker limit function at the cusp 0.

    ``form="fricke"`` evaluates K_infty at -1/(Nz); ``form="closed"`` uses the
    divisor sum over level-1 values at d z.
    """
    if form == "fricke":
        return klf_infty_gamma0(fricke(z, N), N)
    if form == "closed":
        pts = [(d, _scaled(z, d, 1)) for d in divisors(N)]
        return _klf_divisor_sum(N, pts) - klf_level_shift(N)
    raise ValueError(f"unknown form {form!r}")


def klf_pair_sum(z, N: int) -> float:
    """K_0(z) + K_infty(z) + 2 (log N - sum log p/(p+1))/v, evaluated two ways.

    Returns the divisor-sum side; raises ArithmeticError if the route through
    the two Kronecker limit functions disagrees by more than 1e-7.
    """
    pts = []
    for d in divisors(N):
        pts.append((d, _scaled(z, N, d)))
        pts.append((d, _scaled(z, d, 1)))
    rhs = _klf_divisor_sum(N, pts)
    lhs = klf_zero_gamma0(z, N) + klf_infty_gamma0(z, N) + 2.0 * klf_level_shift(N)
    if abs(lhs - rhs) > PAIR_SUM_TOL:
        raise ArithmeticError(f"pair-sum identity off by {abs(lhs - rhs):.3e} at N = {N}, z = {z}")
    return rhs


def klf_elliptic_weighted_sum(N: int) -> float:
    """sum_j (1 - 1/ord e_j)(K_0(e_j) + K_infty(e_j)) over the elliptic points."""
    terms = []
    for e in elliptic_points(N):
        both = klf_zero_gamma0(e.z, N) + klf_infty_gamma0(e.z, N)
        terms.append((1.0 - 1.0 / e.order) * both)
    return math.fsum(terms)
