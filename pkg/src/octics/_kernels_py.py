"""Pure-Python scan over arrangement-point counters.

Reference twin of the compiled ``_kernels.scan_counters``; both must return
identical arrays.
"""

from __future__ import annotations

import numpy as np


def scan_counters(base: int, r: int, bounds, restrict: bool) -> np.ndarray:
    """Rows (p4_0, p4_1, p5_0, p5_1, p5_2, l3, euler) in lexicographic counter order.

    ``base`` is the Euler number with all six counters at zero.  With
    ``restrict`` the arrangement-level necessary conditions are applied:
    q-fold points need r >= q components, points on triple curves need
    enough triple lines, and triple lines need r >= 3.
    """
    b40, b41, b50, b51, b52, bl3 = (int(b) for b in bounds)
    rows = []
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
                        lo, hi = 0, bl3
                        if restrict:
                            if p41 or p51:
                                lo = 1
                            if p52:
                                lo = 2
                            if r < 3:
                                hi = 0
                        partial = base + 4 * p40 + 3 * p41 + 16 * p50 + 18 * p51 + 20 * p52
                        for l3 in range(lo, hi + 1):
                            rows.append((p40, p41, p50, p51, p52, l3, partial + l3))
    return np.array(rows, dtype=np.int64).reshape(-1, 7)
