"""Numba backend selection.

Hot kernels in :mod:`bidisk._kernels` exist in two flavours: explicit loops
compiled with ``numba.njit``, and a vectorized pure-numpy twin.  The numba
flavour is used when numba imports cleanly and the environment variable
``BIDISK_NO_NUMBA`` is unset (or not "1").  Setting ``BIDISK_NO_NUMBA=1``
forces the numpy path, which is handy on platforms where JIT compilation is
unavailable or unwanted.
"""

from __future__ import annotations

import os

_forced_off = os.environ.get("BIDISK_NO_NUMBA", "0") == "1"

if not _forced_off:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - depends on the install
        njit = None
        HAS_NUMBA = False
else:
    njit = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _forced_off


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
