"""Analytic invariants of the modular curves X_0(N) and their Green's function ledger.

Submodules: ``arith``, ``specfun``, ``hyperbolic``, ``gamma0``,
``eisenstein_level1``, ``gamma0n_functions``, ``scattering_gamma0``,
``bounds`` and the ``cli``. Hot loops live in ``_kernels`` and run under
numba unless ``CUSPBOUND_BACKEND=numpy``.
"""
from ._backend import USE_NUMBA

__version__ = "0.1.0"

__all__ = ["USE_NUMBA", "__version__"]
