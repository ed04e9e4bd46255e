"""Kernel backend selection.

The compiled extension is preferred; the numpy implementation is the
fallback.  Set ``SUPERDISCORD_NO_EXT=1`` to force the fallback (used by the
benchmark and by tests that compare the two).
"""

import os

from . import _kernels_py

if os.environ.get("SUPERDISCORD_NO_EXT", "") == "1":
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND_NAME
