"""Kernel backend selection.

``CUSPBOUND_BACKEND=numpy`` forces the pure-numpy kernels; the default is
``numba`` whenever it can be imported.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

BACKEND_ENV = "CUSPBOUND_BACKEND"


def requested_backend():
    return os.environ.get(BACKEND_ENV, "numba").strip().lower()


HAS_NUMBA = numba is not None
USE_NUMBA = HAS_NUMBA and requested_backend() != "numpy"


def njit(fn):
    """Compile ``fn`` with numba when available, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
