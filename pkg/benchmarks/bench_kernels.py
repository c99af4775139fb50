"""Time the compiled counter-grid scan against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--wide]

``--wide`` doubles every counter bound, which is where the compiled kernel
pays off most.
"""

import argparse
import time

import numpy as np

from octics import kernels
from octics.enumerator import CATALOG_MAX_COUNTERS, SearchBounds, chunks


def run(scan, work, bounds):
    start = time.perf_counter()
    total = 0
    for base, r in work:
        total += len(scan(base, r, bounds, True))
    return time.perf_counter() - start, total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--wide", action="store_true")
    args = ap.parse_args()

    bounds = CATALOG_MAX_COUNTERS
    if args.wide:
        bounds = tuple(2 * b for b in bounds)
    work = [(c.base(), len(c.degrees)) for c in chunks(SearchBounds(bounds))]
    print(f"{len(work)} chunks, counter bounds {bounds}")

    backends = [("python", kernels.scan_counters_py)]
    if kernels.scan_counters_c is None:
        print("compiled kernel not built; timing the fallback only")
    else:
        backends.insert(0, ("cython", kernels.scan_counters_c))
        sample = work[:: max(1, len(work) // 20)]
        for base, r in sample:
            assert np.array_equal(kernels.scan_counters_c(base, r, bounds, True),
                                  kernels.scan_counters_py(base, r, bounds, True))

    best = {}
    for name, scan in backends:
        times = []
        for _ in range(args.repeat):
            elapsed, rows = run(scan, work, bounds)
            times.append(elapsed)
        best[name] = min(times)
        print(f"{name:>7}: {rows:>10,d} rows  best {best[name]:.3f}s  ({rows / best[name] / 1e6:.1f} M rows/s)")
    if len(best) == 2:
        print(f"speedup: {best['python'] / best['cython']:.1f}x")


if __name__ == "__main__":
    main()
