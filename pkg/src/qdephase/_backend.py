"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; otherwise the
pure-NumPy fallback is used.  Set ``QDEPHASE_FORCE_PYTHON=1`` in the
environment to skip the compiled extension (useful for benchmarking and for
debugging suspected kernel discrepancies).
"""

import os

if os.environ.get("QDEPHASE_FORCE_PYTHON", "0") not in ("", "0"):
    from . import _core_py as kernels
else:
    try:
        from . import _core as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _core_py as kernels  # type: ignore[no-redef]


def backend_name():
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return kernels.BACKEND
