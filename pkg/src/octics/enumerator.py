"""Exhaustive search over combinatorial arrangement data.

The search space is: every partition of 8 into component degrees, every
assignment of isolated points to components (up to permutation of equal
components), and every vector of the six arrangement counters within bounds.
The first two choices form independent chunks; the counter grid inside a
chunk is scanned by the compiled kernel (see :mod:`octics.kernels`).

Output order is fixed: partitions ascending, then component point maps
ascending, then counters ascending.  Chunks are produced in that order and
concatenated, so results do not depend on the number of workers.

Everything found here is only known to satisfy necessary conditions.
"""

from __future__ import annotations

import csv
import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, groupby, product
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .feasibility import max_nodes
from .invariants import COEFFICIENTS, base_euler
from .model import Arrangement, ArrangementPoints, ComponentSurface

INTERVAL = (-296, 104)

# largest value of each counter in the table: p4_0, p4_1, p5_0, p5_1, p5_2, l3
CATALOG_MAX_COUNTERS = (12, 9, 1, 2, 4, 4)

COUNTER_NAMES = ("p4_0", "p4_1", "p5_0", "p5_1", "p5_2", "l3")


class NodePolicy(str, enum.Enum):
    CATALOG_CAPACITIES = "catalog"
    OFF = "off"


@dataclass(frozen=True)
class SearchBounds:
    max_counter: tuple[int, int, int, int, int, int] = CATALOG_MAX_COUNTERS
    node_policy: NodePolicy = NodePolicy.CATALOG_CAPACITIES
    allow_m45: bool = False
    restrict_to_necessary: bool = True
    # per-component bound on isolated 4- and 5-fold points when allow_m45
    max_isolated_high: int = 1
    # restrict the search to these degree partitions (ascending tuples)
    partitions: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        counters = tuple(int(b) for b in self.max_counter)
        if len(counters) != 6 or min(counters) < 0:
            raise ValueError(f"max_counter needs six non-negative bounds, got {self.max_counter}")
        if self.max_isolated_high < 0:
            raise ValueError("max_isolated_high must be non-negative")
        object.__setattr__(self, "max_counter", counters)
        object.__setattr__(self, "node_policy", NodePolicy(self.node_policy))
        if self.partitions is not None:
            parts = tuple(sorted(tuple(sorted(p)) for p in self.partitions))
            for p in parts:
                if sum(p) != 8 or min(p) < 1:
                    raise ValueError(f"{p} is not a partition of 8")
            object.__setattr__(self, "partitions", parts)


def partitions_of(n: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of n as ascending tuples, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _point_maps(degree: int, b: SearchBounds) -> list[tuple[tuple[int, int], ...]]:
    """Admissible isolated-point maps for one component, sorted."""
    cap = max_nodes(degree)
    if b.node_policy is NodePolicy.OFF or cap is None:
        # unknown capacity: no bound to enumerate up to
        node_range = [0]
    else:
        node_range = range(cap + 1)
    high = range(b.max_isolated_high + 1) if b.allow_m45 else [0]
    maps = []
    for m2 in node_range:
        for m4 in high if degree >= 4 else [0]:
            for m5 in high if degree >= 5 else [0]:
                maps.append(tuple((p, m) for p, m in ((2, m2), (4, m4), (5, m5)) if m))
    return sorted(maps)


@dataclass(frozen=True)
class Chunk:
    degrees: tuple[int, ...]
    point_maps: tuple[tuple[tuple[int, int], ...], ...]

    def totals(self) -> tuple[int, int, int]:
        t = {2: 0, 4: 0, 5: 0}
        for pm in self.point_maps:
            for p, m in pm:
                t[p] += m
        return t[2], t[4], t[5]

    def base(self) -> int:
        m2, m4, m5 = self.totals()
        k = COEFFICIENTS
        return base_euler(self.degrees) + k["m2"] * m2 + k["m4"] * m4 + k["m5"] * m5

    def components(self) -> tuple[ComponentSurface, ...]:
        return tuple(ComponentSurface(d, dict(pm)) for d, pm in zip(self.degrees, self.point_maps))


def chunks(b: SearchBounds) -> list[Chunk]:
    parts = b.partitions if b.partitions is not None else tuple(partitions_of(8))
    out = []
    for degrees in parts:
        per_group = []
        for d, grp in groupby(degrees):
            k = len(list(grp))
            per_group.append(list(combinations_with_replacement(_point_maps(d, b), k)))
        for combo in product(*per_group):
            maps = tuple(pm for group in combo for pm in group)
            out.append(Chunk(degrees, maps))
    return out


def scan_chunk(chunk: Chunk, b: SearchBounds) -> np.ndarray:
    return kernels.scan_counters(chunk.base(), len(chunk.degrees), b.max_counter, b.restrict_to_necessary)


def _scan_job(args):
    chunk, b = args
    return scan_chunk(chunk, b)


def default_jobs() -> int:
    return os.cpu_count() or 1


def enumerate_chunks(b: SearchBounds, jobs: int = 1) -> Iterator[tuple[Chunk, np.ndarray]]:
    """(chunk, counter rows) pairs in canonical order."""
    todo = chunks(b)
    if jobs <= 1:
        for c in todo:
            yield c, scan_chunk(c, b)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from zip(todo, pool.map(_scan_job, ((c, b) for c in todo), chunksize=8))


def _arrangement(comps, row) -> Arrangement:
    p = ArrangementPoints(*(int(x) for x in row[:5]))
    return Arrangement(comps, p, int(row[5]))


def enumerate_arrangements(b: SearchBounds = SearchBounds(), jobs: int = 1) -> Iterator[tuple[Arrangement, int]]:
    """Stream of (arrangement, e(X^)) over the search space."""
    for chunk, rows in enumerate_chunks(b, jobs):
        comps = chunk.components()
        for row in rows:
            yield _arrangement(comps, row), int(row[6])


def csv_columns(b: SearchBounds) -> tuple[str, ...]:
    cols = ("degrees",) + COUNTER_NAMES + ("m2",)
    if b.allow_m45:
        cols += ("m4", "m5")
    return cols + ("euler",)


def write_csv(fh, b: SearchBounds = SearchBounds(), jobs: int = 1) -> int:
    """Write the search results as CSV; returns the number of rows."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(csv_columns(b))
    n = 0
    for chunk, rows in enumerate_chunks(b, jobs):
        label = "(" + ",".join(map(str, chunk.degrees)) + ")"
        m2, m4, m5 = chunk.totals()
        extra = [m2, m4, m5] if b.allow_m45 else [m2]
        k = len(extra)
        block = np.empty((len(rows), 7 + k), dtype=np.int64)
        block[:, :6] = rows[:, :6]
        block[:, 6:6 + k] = extra
        block[:, 6 + k] = rows[:, 6]
        w.writerows([label, *r] for r in block.tolist())
        n += len(rows)
    return n


@dataclass
class CoverageReport:
    distinct_values: list[int]
    interval_gaps: list[int]
    extremes: tuple[int, int] | None
    witnesses: dict[int, Arrangement] = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .model import arrangement_to_dict

        return {
            "interval": list(INTERVAL),
            "distinct_count": len(self.distinct_values),
            "distinct_values": self.distinct_values,
            "interval_gaps": self.interval_gaps,
            "extremes": list(self.extremes) if self.extremes else None,
            "witnesses": {str(e): arrangement_to_dict(a) for e, a in sorted(self.witnesses.items())},
        }


def coverage(results: Iterable[tuple[Arrangement, int]]) -> CoverageReport:
    """Distinct Euler numbers, gaps in the even grid of the interval, and witnesses."""
    from .model import canonical_form

    best: dict[int, Arrangement] = {}
    for a, e in results:
        a = canonical_form(a)
        cur = best.get(e)
        if cur is None or a < cur:
            best[e] = a
    values = sorted(best)
    gaps = [v for v in range(INTERVAL[0], INTERVAL[1] + 1, 2) if v not in best]
    extremes = (values[0], values[-1]) if values else None
    return CoverageReport(values, gaps, extremes, {e: best[e] for e in values})


def coverage_of_search(b: SearchBounds = SearchBounds(), jobs: int = 1) -> CoverageReport:
    """Coverage over the search space without materializing every arrangement."""
    best: dict[int, Arrangement] = {}
    for chunk, rows in enumerate_chunks(b, jobs):
        if not len(rows):
            continue
        values, first = np.unique(rows[:, 6], return_index=True)
        comps = None
        for v, i in zip(values.tolist(), first.tolist()):
            # chunks arrive in canonical order, so the first hit is the least
            if v not in best:
                comps = comps or chunk.components()
                best[v] = _arrangement(comps, rows[i])
    values = sorted(best)
    gaps = [v for v in range(INTERVAL[0], INTERVAL[1] + 1, 2) if v not in best]
    extremes = (values[0], values[-1]) if values else None
    return CoverageReport(values, gaps, extremes, {e: best[e] for e in values})


def witness(e: int, b: SearchBounds = SearchBounds()) -> Arrangement | None:
    """Least arrangement (in search order) with e(X^) = e, or None."""
    for chunk, rows in enumerate_chunks(b):
        hits = np.flatnonzero(rows[:, 6] == e) if len(rows) else []
        if len(hits):
            return _arrangement(chunk.components(), rows[hits[0]])
    return None
