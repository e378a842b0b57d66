"""The numpy and numba forms of every kernel agree, and the backend flag is honoured."""
import os
import subprocess
import sys

import numpy as np
import pytest

from cuspbound import _kernels as K
from cuspbound._backend import HAS_NUMBA
from cuspbound.quadrature import _legendre

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba not installed")


def _unit_rule():
    x, w = _legendre(48)
    return 0.5 * (x + 1.0), 0.5 * w


CASES = [
    ("bessel", K.bessel_k_scaled_numpy, K.bessel_k_scaled_numba, (1.3, np.linspace(0.05, 30, 60), 0.05, 8.0)),
    ("lattice", K.lattice_box_sum_numpy, K.lattice_box_sum_numba, (0.3, 1.2, 2.0, 80)),
    ("coset", K.coset_rows_numpy, K.coset_rows_numba, (0.2, 0.9, 2.0, 6, 20, 500)),
    ("eta", K.log_eta_sum_numpy, K.log_eta_sum_numba, (-0.2, 0.7, 30)),
    ("heat", K.heat_radial_numpy, K.heat_radial_numba, (0.7, np.geomspace(1e-3, 30.0, 40), *_unit_rule())),
]


@needs_numba
@pytest.mark.parametrize("name, slow, fast, args", CASES, ids=[c[0] for c in CASES])
def test_numba_matches_numpy(name, slow, fast, args):
    np.testing.assert_allclose(fast(*args), slow(*args), rtol=1e-12, atol=1e-15)


@needs_numba
@pytest.mark.parametrize("N", [1, 2, 3, 7, 13, 91, 9999, 10007])
def test_elliptic_roots_match(N):
    a2, a3 = K.elliptic_roots_numpy(N)
    b2, b3 = K.elliptic_roots_numba(N)
    assert a2.tolist() == b2.tolist() and a3.tolist() == b3.tolist()


def test_bessel_cutoff_covers_decay():
    t = K.bessel_k_cutoff(2.5, 0.05)
    assert 0.05 * (np.cosh(t) - 1) - 2.5 * t >= 60


def _run_backend(backend, code):
    env = dict(os.environ, CUSPBOUND_BACKEND=backend)
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout


def test_backend_flag_selects_kernels():
    code = "from cuspbound import _backend; print(_backend.USE_NUMBA)"
    assert _run_backend("numpy", code).strip() == "False"
    if HAS_NUMBA:
        assert _run_backend("numba", code).strip() == "True"


def test_numpy_backend_end_to_end():
    code = ("from cuspbound.eisenstein_level1 import eisenstein_lattice\n"
            "from cuspbound.gamma0 import profile\n"
            "print(repr(eisenstein_lattice(0.3 + 1.2j, 2.0)), profile(10007).genus)")
    a = _run_backend("numpy", code).split()
    b = _run_backend("numba", code).split()
    assert a[1] == b[1]
    assert float(a[0]) == pytest.approx(float(b[0]), rel=1e-13)
