"""Kernel backend selection.

The compiled extension ``eoent._kernels`` is used when it is importable;
otherwise the NumPy implementation in ``eoent._kernels_py`` is. Setting
``EOENT_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from eoent import _kernels_py

if os.environ.get("EOENT_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from eoent import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

cubic_real_roots = _impl.cubic_real_roots
steady_photon_numbers = _impl.steady_photon_numbers
lyapunov_solve = _impl.lyapunov_solve
covariance_invariants = _impl.covariance_invariants


def backends() -> dict:
    """All importable backends by name (``python`` always present)."""
    found = {"python": _kernels_py}
    try:
        from eoent import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
