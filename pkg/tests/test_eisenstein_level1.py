import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cuspbound.config import Config, set_config
from cuspbound.eisenstein_level1 import (
    ALT_KLF_CONSTANT, FourierTruncation, delta_modular, eisenstein_fourier, eisenstein_lattice,
    fourier_phi_n_level1, klf_infty_level1, klf_infty_level1_limit, log_abs_delta,
    reduce_to_fundamental_domain, scattering_constant_level1, scattering_constant_level1_limit,
    scattering_phi_level1, tau_coefficients,
)
from cuspbound.oracles import dirichlet_beta
from cuspbound.specfun import zeta_fn

C_LEVEL1 = 0.8671324277221846


def delta_theta(z):
    """Delta = (theta_2 theta_3 theta_4 / 2)^8 with nome exp(i pi z), independent of the q-product."""
    q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(z))
    return complex((mpmath.jtheta(2, 0, q) * mpmath.jtheta(3, 0, q) * mpmath.jtheta(4, 0, q) / 2) ** 8)


def test_phi_examples():
    assert scattering_phi_level1(2.0) == pytest.approx(math.pi / 2 * zeta_fn(3.0) / zeta_fn(4.0), rel=1e-14)
    assert scattering_phi_level1(2.0) == pytest.approx(1.744568, abs=1e-6)


@given(st.floats(0.55, 0.95))
def test_phi_functional_equation(s):
    assert scattering_phi_level1(s) * scattering_phi_level1(1 - s) == pytest.approx(1.0, rel=1e-10)


def test_phi_residue():
    for k in range(5, 21):
        eps = 2.0**-k
        assert eps * scattering_phi_level1(1 + eps) * math.pi / 3 == pytest.approx(1.0, abs=4 * eps)


def test_fourier_coefficient_examples():
    assert fourier_phi_n_level1(1, 1.0) == pytest.approx(6 / math.pi, rel=1e-14)
    assert fourier_phi_n_level1(2, 1.0) == pytest.approx(6 / math.pi * 1.5, rel=1e-14)
    assert fourier_phi_n_level1(-3, 2.0) == fourier_phi_n_level1(3, 2.0)
    with pytest.raises(ValueError):
        fourier_phi_n_level1(0, 2.0)


def test_constant_C():
    assert scattering_constant_level1() == pytest.approx(C_LEVEL1, abs=1e-13)
    lim, _ = scattering_constant_level1_limit()
    assert lim == pytest.approx(scattering_constant_level1(), abs=1e-6)


def test_constant_C_matches_zeroth_mode():
    y = 20.0
    zeroth = klf_infty_level1(1j * y) - (y - 3 / math.pi * math.log(y))
    assert zeroth == pytest.approx(scattering_constant_level1(), abs=1e-6)


def test_E_i_2_oracle():
    oracle = 2 * zeta_fn(2.0) * dirichlet_beta(2.0) / zeta_fn(4.0)
    assert dirichlet_beta(2.0) == pytest.approx(0.915965594177219, abs=1e-12)
    assert oracle == pytest.approx(2.7842015453, abs=1e-9)
    assert eisenstein_lattice(1j, 2.0) == pytest.approx(oracle, abs=1e-5)


@pytest.mark.parametrize("z", [1j, 0.3 + 1.2j])
def test_lattice_vs_fourier(z):
    assert eisenstein_lattice(z, 2.0) == pytest.approx(eisenstein_fourier(z, 2.0), abs=1e-6)


def test_large_height_dominance():
    y, s = 10.0, 2.0
    assert abs(eisenstein_fourier(1j * y, s) - (y**s + scattering_phi_level1(s) * y ** (1 - s))) < 1e-5


@settings(max_examples=25, deadline=None)
@given(st.floats(-2, 2), st.floats(0.2, 3.0), st.floats(1.2, 5.0))
def test_eisenstein_invariance(x, y, s):
    z = complex(x, y)
    e = eisenstein_fourier(z, s)
    assert eisenstein_fourier(z + 1, s) == pytest.approx(e, rel=1e-10)
    assert eisenstein_fourier(-1 / z, s) == pytest.approx(e, rel=1e-10)


def test_eisenstein_domain():
    with pytest.raises(ValueError):
        eisenstein_lattice(1j, 1.0)
    with pytest.raises(ValueError):
        eisenstein_fourier(1j, 0.9)


def test_truncation_validation():
    with pytest.raises(ValueError):
        FourierTruncation(0)
    assert FourierTruncation.for_height(0.9).n_max > FourierTruncation.for_height(5.0).n_max


def test_reduce_to_fundamental_domain():
    x, y = reduce_to_fundamental_domain(0.1 + 0.01j)
    assert abs(x) <= 0.5 and x * x + y * y >= 1 - 1e-12


def test_tau():
    assert tau_coefficients(7) == [1, -24, 252, -1472, 4830, -6048, -16744]


def test_delta_periodic_and_modular():
    z = 0.3 + 0.9j
    assert abs(delta_modular(z + 1) / delta_modular(z) - 1) < 1e-12
    z = 0.2 + 1.1j
    assert abs(delta_modular(-1 / z) / (z**12 * delta_modular(z)) - 1) < 1e-8


@pytest.mark.parametrize("z", [0.2 + 1.1j, -0.4 + 0.7j, 0.1 + 0.3j])
def test_delta_matches_theta_product(z):
    assert abs(delta_modular(z) / delta_theta(z) - 1) < 1e-10
    assert log_abs_delta(z) == pytest.approx(math.log(abs(delta_theta(z))), abs=1e-10)


def test_delta_rejects_low_points():
    with pytest.raises(ValueError):
        delta_modular(0.01j)


def test_klf_invariance_and_constant():
    z = 0.4 + 1.3j
    assert klf_infty_level1(-1 / z) == pytest.approx(klf_infty_level1(z), abs=1e-10)
    for y in (5.0, 10.0, 20.0):
        zeroth = klf_infty_level1(1j * y) - (y - 3 / math.pi * math.log(y))
        assert zeroth == pytest.approx(C_LEVEL1, abs=10 * math.exp(-2 * math.pi * y) + 1e-12)


def test_klf_eps_limit_and_alternative_constant():
    lim, _ = klf_infty_level1_limit(1j)
    assert klf_infty_level1(1j) == pytest.approx(lim, abs=1e-5)
    gap = abs(klf_infty_level1(1j, constant=ALT_KLF_CONSTANT) - lim)
    assert gap == pytest.approx(C_LEVEL1 - ALT_KLF_CONSTANT, abs=1e-5)
    assert gap > 2.7


def test_lattice_cutoff_from_config(restore_config):
    set_config(Config(lattice_cutoff=60))
    coarse = eisenstein_lattice(1j, 2.0)
    assert coarse == pytest.approx(eisenstein_lattice(1j, 2.0, cutoff=60), abs=0)
    assert coarse == pytest.approx(eisenstein_fourier(1j, 2.0), abs=1e-6)
