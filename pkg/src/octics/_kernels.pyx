# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan over arrangement-point counters (see _kernels_py for the reference)."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def scan_counters(long base, int r, bounds, bint restrict):
    cdef long b40 = bounds[0], b41 = bounds[1], b50 = bounds[2]
    cdef long b51 = bounds[3], b52 = bounds[4], bl3 = bounds[5]
    cdef long p40, p41, p50, p51, p52, l3, lo, hi
    cdef Py_ssize_t n = 0
    cdef Py_ssize_t size = (b40 + 1) * (b41 + 1) * (b50 + 1) * (b51 + 1) * (b52 + 1) * (bl3 + 1)
    out_arr = np.empty((size, 7), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    for p40 in range(b40 + 1):
        if restrict and p40 and r < 4:
            break
        for p41 in range(b41 + 1):
            if restrict and p41 and r < 4:
                break
            for p50 in range(b50 + 1):
                if restrict and p50 and r < 5:
                    break
                for p51 in range(b51 + 1):
                    if restrict and p51 and r < 5:
                        break
                    for p52 in range(b52 + 1):
                        if restrict and p52 and r < 5:
                            break
                        lo = 0
                        hi = bl3
                        if restrict:
                            if p41 or p51:
                                lo = 1
                            if p52:
                                lo = 2
                            if r < 3:
                                hi = 0
                        for l3 in range(lo, hi + 1):
                            out[n, 0] = p40; out[n, 1] = p41; out[n, 2] = p50
                            out[n, 3] = p51; out[n, 4] = p52; out[n, 5] = l3
                            out[n, 6] = base + 4 * p40 + 3 * p41 + 16 * p50 + 18 * p51 + 20 * p52 + l3
                            n += 1
    return out_arr[:n]
