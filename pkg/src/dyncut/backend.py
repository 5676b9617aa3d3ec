"""Kernel backend selection.

Hot inner loops (push-relabel, maximum-adjacency sweeps) are written once in a
numba-compatible subset of Python and compiled with ``@njit`` when available.
Set ``DYNCUT_BACKEND=python`` to force the uncompiled fallback; anything else
(or unset) uses numba if it imports.
"""

from __future__ import annotations

import os

_requested = os.environ.get("DYNCUT_BACKEND", "auto").lower()

USE_NUMBA = False
if _requested != "python":
    try:
        import numba  # noqa: F401

        USE_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise
        USE_NUMBA = False


def jit(fn):
    """Compile ``fn`` with numba when enabled, otherwise return it unchanged."""
    if USE_NUMBA:
        from numba import njit

        return njit(cache=True)(fn)
    return fn


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
