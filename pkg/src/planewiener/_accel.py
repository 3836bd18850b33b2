"""Optional numba acceleration.

Kernels are written in a numba-compatible subset of Python and run unchanged
(slower) when numba is unavailable, so results never depend on the JIT.
Set PLANEWIENER_NO_NUMBA=1 to force the pure-Python path.
"""

from __future__ import annotations

import os

if os.environ.get("PLANEWIENER_NO_NUMBA"):
    HAVE_NUMBA = False
else:
    try:
        from numba import njit as _njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        HAVE_NUMBA = False


def maybe_njit(func):
    if HAVE_NUMBA:
        return _njit(cache=True)(func)
    return func
