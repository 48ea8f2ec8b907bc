# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for cyclic rank-increment sums.

Both kernels operate on integer cyclic ranks and return exact int64
results, so they are bit-identical to the NumPy fallback in
``circxi._kernels_py``.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def cycle_weight_sum(cnp.int64_t[::1] r):
    """Sum of d*(n-d) over cyclic increments d of the rank sequence r."""
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t k
    cdef cnp.int64_t nn = n
    cdef cnp.int64_t d, total = 0
    if n == 0:
        return 0
    for k in range(n - 1):
        d = (r[k + 1] - r[k]) % nn
        if d < 0:  # C remainder is negative for negative differences
            d += nn
        total += d * (nn - d)
    d = (r[0] - r[n - 1]) % nn
    if d < 0:
        d += nn
    total += d * (nn - d)
    return int(total)


def batch_cycle_weight_sums(cnp.int64_t[:, ::1] perms):
    """cycle_weight_sum applied to each row of a (B, n) rank matrix."""
    cdef Py_ssize_t B = perms.shape[0]
    cdef Py_ssize_t n = perms.shape[1]
    cdef Py_ssize_t b, k
    cdef cnp.int64_t nn = n
    cdef cnp.int64_t d, total
    out = np.empty(B, dtype=np.int64)
    cdef cnp.int64_t[::1] out_v = out
    for b in range(B):
        total = 0
        for k in range(n - 1):
            d = (perms[b, k + 1] - perms[b, k]) % nn
            if d < 0:
                d += nn
            total += d * (nn - d)
        d = (perms[b, 0] - perms[b, n - 1]) % nn
        if d < 0:
            d += nn
        total += d * (nn - d)
        out_v[b] = total
    return out
