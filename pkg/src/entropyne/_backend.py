"""Backend selection for the hot grid kernels.

Two implementations of every grid kernel exist: a numba @njit loop version
and a pure-numpy vectorized version.  The environment variable
ENTROPYNE_BACKEND picks one:

    ENTROPYNE_BACKEND=numba   (default) use numba if importable
    ENTROPYNE_BACKEND=numpy   force the pure-numpy path

The flag is read once at import time.
"""

from __future__ import annotations

import os

_requested = os.environ.get("ENTROPYNE_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(
        f"ENTROPYNE_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

USE_NUMBA = _requested == "numba"
if USE_NUMBA:
    try:
        from numba import njit  # noqa: F401
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if not USE_NUMBA:
    def njit(*args, **kwargs):  # type: ignore[misc]
        """No-op stand-in for numba.njit on the numpy backend."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
