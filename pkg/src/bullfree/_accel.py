"""Backend selection for the numeric kernels.

Set ``BULLFREE_PURE_NUMPY=1`` to skip numba and run the numpy/Python
fallbacks. The flag is read once, at import time.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("BULLFREE_PURE_NUMPY", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and _FLAG not in {"1", "true", "yes", "on"}


def maybe_njit(func):
    """Compile ``func`` with numba when the numba backend is active."""
    if USE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def njit(func):
    """Always compile with numba (kernels that have a separate numpy twin)."""
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
