"""Pure-NumPy fallback for the compiled rank kernels.

Results are bit-identical to ``circxi._ext``: everything is exact int64
arithmetic on cyclic ranks.
"""

import numpy as np


def cycle_weight_sum(r):
    """Sum of d*(n-d) over cyclic increments d of the rank sequence r."""
    r = np.ascontiguousarray(r, dtype=np.int64)
    n = r.shape[0]
    if n == 0:
        return 0
    d = np.mod(np.roll(r, -1) - r, n)
    return int(np.sum(d * (n - d)))


def batch_cycle_weight_sums(perms):
    """cycle_weight_sum applied to each row of a (B, n) rank matrix."""
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    n = perms.shape[1]
    d = np.mod(np.roll(perms, -1, axis=1) - perms, n)
    return np.sum(d * (n - d), axis=1, dtype=np.int64)
