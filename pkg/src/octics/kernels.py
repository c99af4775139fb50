"""Backend selection for the enumeration kernel.

The compiled extension is used when it imports; ``OCTICS_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

import os

from . import _kernels_py

scan_counters_py = _kernels_py.scan_counters

try:
    from ._kernels import scan_counters as scan_counters_c
except ImportError:  # extension not built
    scan_counters_c = None

if scan_counters_c is not None and os.environ.get("OCTICS_PURE_PYTHON", "") in ("", "0"):
    scan_counters = scan_counters_c
    BACKEND = "cython"
else:
    scan_counters = scan_counters_py
    BACKEND = "python"

__all__ = ["BACKEND", "scan_counters", "scan_counters_c", "scan_counters_py"]
