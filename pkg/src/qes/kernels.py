"""Kernel selector.

Imports the compiled extension when available and falls back to the numpy
implementation otherwise. Set ``QES_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("QES_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"


def _c1d(x):
    return np.ascontiguousarray(np.asarray(x, dtype=np.complex128).ravel())


def horner(c, z, order=0):
    return _impl.horner(_c1d(c), _c1d(z), int(order))


def root_sums(roots, z, tol):
    return _impl.root_sums(_c1d(roots), _c1d(z), float(tol))


def bae_system(roots, a, b):
    return _impl.bae_system(_c1d(roots), _c1d(a), _c1d(b))
