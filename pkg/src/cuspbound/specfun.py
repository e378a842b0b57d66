"""Real-argument special functions: Gamma, digamma, zeta, Bessel K."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _kernels

EULER_GAMMA = 0.57721566490153286060651209008240243

# B_2, B_4, ..., B_20
_BERNOULLI_EVEN = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330),
)
# B_{2k} / (2k)!
_EM_COEFFS = tuple(float(b / math.factorial(2 * k)) for k, b in enumerate(_BERNOULLI_EVEN, 1))
_EM_TERMS = 20


def gamma_fn(x: float) -> float:
    """Euler Gamma for x > 0."""
    if x <= 0:
        raise ValueError(f"gamma_fn needs x > 0, got {x}")
    return math.gamma(x)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0 (recurrence plus asymptotic series)."""
    if x <= 0:
        raise ValueError(f"digamma needs x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = inv2 * (1/12 - inv2 * (1/120 - inv2 * (1/252 - inv2 * (1/240 - inv2 / 132))))
    return acc + math.log(x) - 0.5 / x - series


def _rising(s: float, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= s + j
    return out


def _zeta_em(s: float) -> float:
    """Euler-Maclaurin zeta, valid for real s != 1 with s > -19."""
    m = _EM_TERMS
    head = math.fsum(n ** (-s) for n in range(1, m))
    delta = s - 1.0
    # M^(1-s)/(s-1) = 1/(s-1) + expm1(-(s-1) log M)/(s-1) keeps the pole exact
    logm = math.log(m)
    if abs(delta) < 1e-3:
        pole = 1.0 / delta + math.expm1(-delta * logm) / delta
    else:
        pole = m ** (1.0 - s) / delta
    tail = 0.5 * m ** (-s)
    for k, coeff in enumerate(_EM_COEFFS, 1):
        tail += coeff * _rising(s, 2 * k - 1) * m ** (1.0 - s - 2 * k)
    return math.fsum((head, pole, tail))


def _zeta_em_derivative(s: float) -> float:
    """d/ds of the Euler-Maclaurin formula, term by term."""
    m = _EM_TERMS
    logm = math.log(m)
    parts = [-math.fsum(n ** (-s) * math.log(n) for n in range(2, m))]
    delta = s - 1.0
    mp = m ** (1.0 - s)
    parts.append(-logm * mp / delta - mp / (delta * delta))
    parts.append(-0.5 * logm * m ** (-s))
    for k, coeff in enumerate(_EM_COEFFS, 1):
        factors = [s + j for j in range(2 * k - 1)]
        prod = _rising(s, 2 * k - 1)
        dprod = 0.0
        for i in range(len(factors)):
            p = 1.0
            for j, f in enumerate(factors):
                if j != i:
                    p *= f
            dprod += p
        parts.append(coeff * (dprod - logm * prod) * m ** (1.0 - s - 2 * k))
    return math.fsum(parts)


def zeta_fn(s: float) -> float:
    """Riemann zeta on s > 0, s != 1."""
    if s == 1.0:
        raise ValueError("zeta_fn has a pole at s = 1")
    if s <= 0:
        raise ValueError(f"zeta_fn is restricted to s > 0, got {s}")
    if s > 40.0:
        # the Euler-Maclaurin remainder carries (s)_{2K+1}; the Dirichlet series is exact here
        return 1.0 + math.fsum(n ** (-s) for n in range(2, 6))
    return _zeta_em(s)


def zeta_prime_minus1() -> float:
    """zeta'(-1) = 1/12 - log A with A the Glaisher-Kinkelin constant."""
    return _zeta_em_derivative(-1.0)


def bessel_k(nu: float, x, h: float = 0.05):
    """Modified Bessel function K_nu(x) for x > 0, |nu| <= 10.

    Accepts a scalar or an array of ``x``; returns the same shape.
    """
    scalar = np.ndim(x) == 0
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xa <= 0):
        raise ValueError("bessel_k needs x > 0")
    if abs(nu) > 10:
        raise ValueError("bessel_k supports |nu| <= 10")
    t_max = _kernels.bessel_k_cutoff(nu, float(xa.min()))
    vals = _kernels.bessel_k_scaled(float(nu), xa, h, t_max) * np.exp(-xa)
    return float(vals[0]) if scalar else vals.reshape(np.shape(x))


def bessel_k_scaled(nu: float, x, h: float = 0.05) -> np.ndarray:
    """exp(x) K_nu(x) for an array of x (no underflow at large x)."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    t_max = _kernels.bessel_k_cutoff(nu, float(xa.min()))
    return _kernels.bessel_k_scaled(float(nu), xa, h, t_max)
