"""Numba switch.

Set ``CYCLOCODE_NO_NUMBA=1`` to force the pure numpy kernels even when numba
is importable. The flag is read once at import time.
"""
from __future__ import annotations

import os

_DISABLED = os.environ.get("CYCLOCODE_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by CYCLOCODE_NO_NUMBA")
    import numba as _numba

    HAVE_NUMBA = True
    njit = _numba.njit
    prange = _numba.prange
except ImportError:
    HAVE_NUMBA = False
    prange = range

    def njit(*args, **kwargs):
        # bare @njit or @njit(...)
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
