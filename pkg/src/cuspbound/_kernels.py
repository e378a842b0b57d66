"""Inner loops in two interchangeable forms.

Every kernel exists as a vectorized numpy function and as a loop
function compiled by numba. The public names at the bottom bind to one of
the two according to ``_backend.USE_NUMBA``; both stay importable so tests
and the benchmark can compare them directly.
"""
from __future__ import annotations

import math

import numpy as np

from ._backend import USE_NUMBA, njit

TWO_PI = 2.0 * math.pi


# --- modified Bessel K by the trapezoidal rule --------------------------------
# K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt. The integrand is entire and
# decays double-exponentially, so the plain trapezoidal rule converges
# geometrically in 1/h. Values are returned scaled by exp(x).


def bessel_k_cutoff(nu, x_min):
    """Upper limit T with x (cosh T - 1) - |nu| T beyond 60 for all x >= x_min."""
    nu = abs(nu)
    t = 1.0
    while x_min * (math.cosh(t) - 1.0) - nu * t < 60.0:
        t += 0.5
    return t


def bessel_k_scaled_numpy(nu, x, h, t_max):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    t = np.arange(0.0, t_max + h, h)
    w = np.full(t.shape, h)
    w[0] = 0.5 * h
    expo = -np.outer(x, np.cosh(t) - 1.0)
    # cosh(nu t) folded into the exponent so huge t never overflows
    vals = 0.5 * (np.exp(expo + nu * t) + np.exp(expo - nu * t))
    return vals @ w


def _bessel_k_scaled_loop(nu, x, h, t_max):
    n_t = int(t_max / h) + 1
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        xi = x[i]
        acc = 0.5 * h * 1.0
        for j in range(1, n_t + 1):
            t = j * h
            e = -xi * (math.cosh(t) - 1.0)
            term = 0.5 * (math.exp(e + nu * t) + math.exp(e - nu * t))
            acc += h * term
            if e < -745.0:
                break
        out[i] = acc
    return out


# --- lattice sums for the level-1 Eisenstein series --------------------------


def lattice_box_sum_numpy(x, y, s, m):
    """sum over (c, d) != 0 with |c|, |d| <= m of ((c x + d)^2 + (c y)^2)^-s."""
    d = np.arange(-m, m + 1, dtype=float)
    total = 0.0
    for c in range(-m, m + 1):
        q = (c * x + d) ** 2 + (c * y) ** 2
        if c == 0:
            q = q[d != 0]
        total += float(np.sum(q ** (-s)))
    return total


def _lattice_box_sum_loop(x, y, s, m):
    total = 0.0
    for c in range(-m, m + 1):
        row = 0.0
        cy2 = (c * y) ** 2
        cx = c * x
        for d in range(-m, m + 1):
            if c == 0 and d == 0:
                continue
            q = (cx + d) ** 2 + cy2
            row += q ** (-s)
        total += row
    return total


# --- brute-force coset sums over Gamma_infty \ Gamma_0(N) ---------------------


def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


def coset_rows_numpy(x, y, s, level, k_max, d_max):
    """Row sums R[k] = sum_{|d| <= d_max, gcd(c, d) = 1} |cz + d|^(-2s), c = level*k.

    Index 0 of the result is unused (c = 0 contributes the identity coset).
    """
    d = np.arange(-d_max, d_max + 1, dtype=np.int64)
    out = np.zeros(k_max + 1)
    for k in range(1, k_max + 1):
        c = level * k
        mask = np.gcd(d, c) == 1
        dd = d[mask].astype(float)
        q = (c * x + dd) ** 2 + (c * y) ** 2
        out[k] = float(np.sum(q ** (-s)))
    return out


def _coset_rows_loop(x, y, s, level, k_max, d_max):
    out = np.zeros(k_max + 1)
    for k in range(1, k_max + 1):
        c = level * k
        cx = c * x
        cy2 = (c * y) ** 2
        row = 0.0
        for d in range(-d_max, d_max + 1):
            if _gcd_nb(c, d) != 1:
                continue
            row += ((cx + d) ** 2 + cy2) ** (-s)
        out[k] = row
    return out


# --- eta product ---------------------------------------------------------------


def log_eta_sum_numpy(x, y, n_terms):
    """sum_{n=1}^{n_terms} log |1 - q^n| with q = exp(2 pi i z)."""
    n = np.arange(1, n_terms + 1, dtype=float)
    r = np.exp(-TWO_PI * y * n)
    ang = TWO_PI * x * n
    # |1 - r e^{i a}|^2 = 1 - 2 r cos a + r^2
    return 0.5 * float(np.sum(np.log1p(r * r - 2.0 * r * np.cos(ang))))


def _log_eta_sum_loop(x, y, n_terms):
    acc = 0.0
    for n in range(1, n_terms + 1):
        r = math.exp(-TWO_PI * y * n)
        a = TWO_PI * x * n
        acc += math.log1p(r * r - 2.0 * r * math.cos(a))
    return 0.5 * acc


# --- elliptic fixed points of Gamma_0(N) --------------------------------------


def elliptic_roots_numpy(level):
    """Residues n in [0, N) with n^2 + 1 = 0 and with n^2 - n + 1 = 0 mod N."""
    n = np.arange(level, dtype=np.int64)
    sq = (n * n) % level
    two = np.nonzero((sq + 1) % level == 0)[0]
    three = np.nonzero((sq - n + 1) % level == 0)[0]
    return two.astype(np.int64), three.astype(np.int64)


def _elliptic_roots_loop(level):
    two = []
    three = []
    for n in range(level):
        sq = (n * n) % level
        if (sq + 1) % level == 0:
            two.append(n)
        if (sq - n + 1) % level == 0:
            three.append(n)
    a = np.empty(len(two), dtype=np.int64)
    for i in range(len(two)):
        a[i] = two[i]
    b = np.empty(len(three), dtype=np.int64)
    for i in range(len(three)):
        b[i] = three[i]
    return a, b


# --- free-space heat kernel radial integral ------------------------------------
# I(t) = int_0^inf 2v (rho + v^2) exp(-((rho+v^2)^2 - rho^2)/4t)
#                 / sqrt(cosh(rho + v^2) - cosh rho) dv
# after r = rho + v^2; exp(-rho^2/4t) is applied by the caller.


def heat_radial_numpy(rho, t, unit_nodes, unit_weights):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    vmax = np.sqrt(np.sqrt(rho * rho + 240.0 * t) - rho)
    v = vmax[:, None] * unit_nodes[None, :]
    w = vmax[:, None] * unit_weights[None, :]
    v2 = v * v
    r = rho + v2
    expo = -(2.0 * rho * v2 + v2 * v2) / (4.0 * t[:, None])
    # cosh(rho + v^2) - cosh(rho) = 2 sinh(rho + v^2/2) sinh(v^2/2)
    denom = np.sqrt(2.0 * np.sinh(rho + 0.5 * v2) * np.sinh(0.5 * v2))
    vals = 2.0 * v * r * np.exp(expo) / denom
    return np.sum(vals * w, axis=1)


def _heat_radial_loop(rho, t, unit_nodes, unit_weights):
    out = np.empty(t.shape[0])
    for i in range(t.shape[0]):
        ti = t[i]
        vmax = math.sqrt(math.sqrt(rho * rho + 240.0 * ti) - rho)
        acc = 0.0
        for j in range(unit_nodes.shape[0]):
            v = vmax * unit_nodes[j]
            v2 = v * v
            r = rho + v2
            expo = -(2.0 * rho * v2 + v2 * v2) / (4.0 * ti)
            denom = math.sqrt(2.0 * math.sinh(rho + 0.5 * v2) * math.sinh(0.5 * v2))
            acc += vmax * unit_weights[j] * 2.0 * v * r * math.exp(expo) / denom
        out[i] = acc
    return out


# --- compiled twins -------------------------------------------------------------

_gcd_nb = njit(_gcd)
bessel_k_scaled_numba = njit(_bessel_k_scaled_loop)
lattice_box_sum_numba = njit(_lattice_box_sum_loop)
coset_rows_numba = njit(_coset_rows_loop)
log_eta_sum_numba = njit(_log_eta_sum_loop)
elliptic_roots_numba = njit(_elliptic_roots_loop)
heat_radial_numba = njit(_heat_radial_loop)


def _pick(fast, slow):
    return fast if USE_NUMBA else slow


def bessel_k_scaled(nu, x, h, t_max):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if USE_NUMBA:
        return bessel_k_scaled_numba(float(nu), x, float(h), float(t_max))
    return bessel_k_scaled_numpy(nu, x, h, t_max)


def lattice_box_sum(x, y, s, m):
    return float(_pick(lattice_box_sum_numba, lattice_box_sum_numpy)(float(x), float(y), float(s), int(m)))


def coset_rows(x, y, s, level, k_max, d_max):
    fn = _pick(coset_rows_numba, coset_rows_numpy)
    return fn(float(x), float(y), float(s), int(level), int(k_max), int(d_max))


def log_eta_sum(x, y, n_terms):
    return float(_pick(log_eta_sum_numba, log_eta_sum_numpy)(float(x), float(y), int(n_terms)))


def elliptic_roots(level):
    return _pick(elliptic_roots_numba, elliptic_roots_numpy)(int(level))


def heat_radial(rho, t, unit_nodes, unit_weights):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    fn = _pick(heat_radial_numba, heat_radial_numpy)
    return fn(float(rho), t, unit_nodes, unit_weights)
