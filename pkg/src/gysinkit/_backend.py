"""Select the elimination kernel at import time.

The compiled ``_elim`` extension is used when it was built; otherwise the
pure-Python ``_elim_py`` fallback.  Setting ``GYSINKIT_PURE_PYTHON=1`` forces
the fallback.
"""

import os

from . import _elim_py

if os.environ.get("GYSINKIT_PURE_PYTHON", "") not in ("", "0"):
    rref_int = _elim_py.rref_int
    BACKEND = "python"
else:
    try:
        from ._elim import rref_int  # type: ignore[import-not-found]

        BACKEND = "cython"
    except ImportError:
        rref_int = _elim_py.rref_int
        BACKEND = "python"

__all__ = ["rref_int", "BACKEND"]
