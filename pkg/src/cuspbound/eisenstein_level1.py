"""Eisenstein series, discriminant and Kronecker limit function for PSL_2(Z)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arith import divisors
from .config import get_config
from .hyperbolic import as_point
from .quadrature import panel_nodes, pole_constant
from .specfun import EULER_GAMMA, bessel_k, gamma_fn, zeta_fn, zeta_prime_minus1

SQRT_PI = math.sqrt(math.pi)
LEVEL1_VOLUME = math.pi / 3.0
Y_MIN = 0.05

# (3/pi)(gamma - log 4 pi), a candidate additive constant for K_infty that does
# not match the eps-limit; kept only to show that it fails
ALT_KLF_CONSTANT = (3.0 / math.pi) * (EULER_GAMMA - math.log(4.0 * math.pi))


@dataclass(frozen=True)
class FourierTruncation:
    n_max: int
    q_tol: float = 1e-18

    def __post_init__(self):
        if self.n_max < 1 or self.q_tol <= 0:
            raise ValueError("FourierTruncation needs n_max >= 1 and q_tol > 0")

    @classmethod
    def for_height(cls, y: float, q_tol: float | None = None) -> "FourierTruncation":
        """Smallest mode count whose first omitted term is below q_tol (with margin)."""
        q_tol = get_config().q_tol if q_tol is None else q_tol
        n = int(math.ceil((-math.log(q_tol) + 10.0) / (2.0 * math.pi * y))) + 2
        return cls(n, q_tol)


# --- fundamental domain ------------------------------------------------------


def reduce_to_fundamental_domain(z) -> tuple[float, float]:
    """PSL_2(Z)-equivalent point with |x| <= 1/2 and |z| >= 1."""
    p = as_point(z)
    x, y = p.x, p.y
    for _ in range(10_000):
        x -= math.floor(x + 0.5)
        r2 = x * x + y * y
        if r2 >= 1.0 - 1e-15:
            return x, y
        x, y = -x / r2, y / r2
    raise RuntimeError("fundamental-domain reduction did not terminate")


# --- scattering data ---------------------------------------------------------


def _check_not_pole(s: float) -> None:
    if s == 1.0:
        raise ValueError("s = 1 is a pole; use the epsilon-limit helpers")


def _zeta_any(s: float) -> float:
    # zeta on s < 0 through the functional equation (used only by phi(1 - s))
    if s > 0:
        return zeta_fn(s)
    if s == 0:
        return -0.5
    one_minus = 1.0 - s
    return (2.0 * (2.0 * math.pi) ** (-one_minus) * math.cos(math.pi * one_minus / 2.0)
            * gamma_fn(one_minus) * zeta_fn(one_minus))


def _gamma_any(x: float) -> float:
    if x > 0:
        return gamma_fn(x)
    return math.gamma(x)


def scattering_phi_level1(s: float) -> float:
    """phi(s) = sqrt(pi) Gamma(s - 1/2)/Gamma(s) zeta(2s - 1)/zeta(2s)."""
    _check_not_pole(s)
    if s <= 0.5:
        # reached only through phi(1 - s) in functional-equation checks
        return SQRT_PI * _gamma_any(s - 0.5) / _gamma_any(s) * _zeta_any(2 * s - 1) / _zeta_any(2 * s)
    return SQRT_PI * gamma_fn(s - 0.5) / gamma_fn(s) * _zeta_any(2 * s - 1) / zeta_fn(2 * s)


def divisor_sigma(n: int, power: float) -> float:
    return math.fsum(float(d) ** power for d in divisors(n))


def fourier_phi_n_level1(n: int, s: float) -> float:
    """phi(n, s) = pi^s |n|^(s-1) sigma_{1-2s}(|n|) / (Gamma(s) zeta(2s))."""
    if n == 0:
        raise ValueError("n = 0 is the constant term, not a Fourier mode")
    m = abs(int(n))
    return math.pi**s * m ** (s - 1.0) * divisor_sigma(m, 1.0 - 2.0 * s) / (gamma_fn(s) * zeta_fn(2.0 * s))


def scattering_constant_level1() -> float:
    """C = (6/pi)(1 - log 4 pi - 12 zeta'(-1))."""
    return (6.0 / math.pi) * (1.0 - math.log(4.0 * math.pi) - 12.0 * zeta_prime_minus1())


def scattering_constant_level1_limit() -> tuple[float, float]:
    """C as the constant term of phi(s) at s = 1 by Richardson extrapolation."""
    cfg = get_config()
    return pole_constant(scattering_phi_level1, 1.0 / LEVEL1_VOLUME, cfg.richardson_kmin, cfg.richardson_kmax)


# --- Eisenstein series ---------------------------------------------------------


def _lattice_tail(x: float, y: float, s: float, m: int) -> float:
    """Integral of |c z + d|^(-2s) y^0 over the plane outside [-L, L]^2, L = m + 1/2.

    In polar coordinates (c, d) = r (cos t, sin t) the radial integral is
    elementary, leaving R(t)^(2-2s) q(t)^(-s) / (2s - 2) over the circle.
    """
    L = m + 0.5
    edges = np.linspace(-math.pi / 4.0, 7.0 * math.pi / 4.0, 8 * 8 + 1)
    t, w = panel_nodes(edges, 24)
    c, d = np.cos(t), np.sin(t)
    q = (x * c + d) ** 2 + (y * c) ** 2
    R = L / np.maximum(np.abs(c), np.abs(d))
    return float(np.dot(w, q ** (-s) * R ** (2.0 - 2.0 * s))) / (2.0 * s - 2.0)


def eisenstein_lattice(z, s: float, cutoff: int | None = None) -> float:
    """E(z, s) from the lattice sum over |c|, |d| <= cutoff plus the exterior integral.

    Uses sum'_{(c,d)} y^s |cz + d|^(-2s) = 2 zeta(2s) E(z, s); the exterior of the
    box is replaced by its integral, which leaves an O(cutoff^(-2s-1)) error.
    """
    if s <= 1:
        raise ValueError(f"lattice sum diverges for s <= 1, got {s}")
    p = as_point(z)
    m = get_config().lattice_cutoff if cutoff is None else int(cutoff)
    box = _kernels.lattice_box_sum(p.x, p.y, s, m)
    tail = _lattice_tail(p.x, p.y, s, m)
    return p.y**s * (box + tail) / (2.0 * zeta_fn(2.0 * s))


def whittaker_modes(y: float, s: float, n_max: int) -> np.ndarray:
    """W-profile 2 sqrt(n y) K_{s-1/2}(2 pi n y) for n = 1..n_max."""
    n = np.arange(1, n_max + 1, dtype=float)
    return 2.0 * np.sqrt(n * y) * bessel_k(s - 0.5, 2.0 * math.pi * n * y)


def _fourier_nonconstant(x: float, y: float, s: float, trunc: FourierTruncation) -> float:
    n = np.arange(1, trunc.n_max + 1)
    coeff = np.array([fourier_phi_n_level1(int(k), s) for k in n])
    modes = whittaker_modes(y, s, trunc.n_max)
    # +n and -n modes pair to 2 cos(2 pi n x)
    return 2.0 * math.fsum(coeff * modes * np.cos(2.0 * math.pi * n * x))


def eisenstein_fourier(z, s: float, trunc: FourierTruncation | None = None, reduce: bool = True) -> float:
    """E(z, s) from its Fourier expansion at the cusp.

    With ``reduce`` the point is first moved into the fundamental domain,
    where y >= sqrt(3)/2 and a dozen modes reach double precision.
    """
    if s <= 1:
        raise ValueError(f"s must exceed 1, got {s}")
    x, y = reduce_to_fundamental_domain(z) if reduce else (as_point(z).x, as_point(z).y)
    if trunc is None:
        cfg = get_config()
        trunc = FourierTruncation(cfg.fourier_nmax) if cfg.fourier_nmax else FourierTruncation.for_height(y)
    return y**s + scattering_phi_level1(s) * y ** (1.0 - s) + _fourier_nonconstant(x, y, s, trunc)


# --- discriminant ----------------------------------------------------------------


def _delta_terms(y: float, q_tol: float) -> int:
    return max(1, int(math.ceil(-math.log(q_tol) / (2.0 * math.pi * y))))


def delta_modular(z, q_tol: float | None = None, y_min: float = Y_MIN) -> complex:
    """Delta(z) = q prod_{n >= 1} (1 - q^n)^24 with q = exp(2 pi i z)."""
    p = as_point(z)
    if p.y < y_min:
        raise ValueError(f"Im z = {p.y} below y_min = {y_min}; the q-product is unreliable there")
    q_tol = get_config().q_tol if q_tol is None else q_tol
    q = complex(math.cos(2 * math.pi * p.x), math.sin(2 * math.pi * p.x)) * math.exp(-2 * math.pi * p.y)
    prod = complex(1.0)
    qn = q
    for _ in range(_delta_terms(p.y, q_tol)):
        prod *= (1.0 - qn) ** 24
        qn *= q
    return q * prod


def tau_coefficients(n_max: int) -> list[int]:
    """Ramanujan tau(1..n_max) by expanding q prod (1 - q^n)^24 in integers."""
    poly = [0] * n_max
    poly[0] = 1  # coefficient of q^0 in prod (1 - q^n)^24
    for n in range(1, n_max):
        for _ in range(24):
            for k in range(n_max - 1, n - 1, -1):
                poly[k] -= poly[k - n]
    return poly  # tau(k + 1) = poly[k]


def log_abs_delta(z, q_tol: float | None = None) -> float:
    """log |Delta(z)| from the eta product at z itself (no reduction)."""
    p = as_point(z)
    q_tol = get_config().q_tol if q_tol is None else q_tol
    return -2.0 * math.pi * p.y + 24.0 * _kernels.log_eta_sum(p.x, p.y, _delta_terms(p.y, q_tol))


def log_y12_delta_sq(z) -> float:
    """log(y^12 |Delta(z)|^2), a PSL_2(Z)-invariant, computed in the fundamental domain."""
    x, y = reduce_to_fundamental_domain(z)
    return 12.0 * math.log(y) + 2.0 * log_abs_delta((x, y))


def klf_infty_level1(z, constant: float | None = None) -> float:
    """K(z) = -(1/4 pi) log(y^12 |Delta(z)|^2) + C.

    ``constant`` overrides C (used to show the alternative constant fails).
    """
    c = scattering_constant_level1() if constant is None else constant
    return -log_y12_delta_sq(z) / (4.0 * math.pi) + c


def klf_infty_level1_limit(z) -> tuple[float, float]:
    """Constant term of E(z, s) at s = 1 from the Fourier evaluation, by Richardson."""
    cfg = get_config()
    return pole_constant(lambda s: eisenstein_fourier(z, s), 1.0 / LEVEL1_VOLUME,
                         cfg.richardson_kmin, cfg.richardson_kmax)
