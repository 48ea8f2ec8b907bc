"""Kernel backend selection.

The compiled Cython extension is used when available; otherwise the
NumPy fallback is selected. Set the environment variable
``CIRCXI_FORCE_PYTHON=1`` to force the fallback (used by the benchmark
and the backend-parity tests).
"""

import os

from circxi import _kernels_py

if os.environ.get("CIRCXI_FORCE_PYTHON"):
    BACKEND = "python"
    cycle_weight_sum = _kernels_py.cycle_weight_sum
    batch_cycle_weight_sums = _kernels_py.batch_cycle_weight_sums
else:
    try:
        from circxi._ext import batch_cycle_weight_sums, cycle_weight_sum

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        BACKEND = "python"
        cycle_weight_sum = _kernels_py.cycle_weight_sum
        batch_cycle_weight_sums = _kernels_py.batch_cycle_weight_sums

__all__ = ["BACKEND", "cycle_weight_sum", "batch_cycle_weight_sums"]
