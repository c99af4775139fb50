"""The table of example arrangements, embedded as row families.

A row family is one table line together with a range of node counts (the
table compresses runs of rows that differ only in m2).  The data ships as
``data/catalog.json`` and is checked against a SHA-256 digest on load.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources

from .enumerator import INTERVAL, coverage
from .feasibility import is_blocking, max_nodes, validate
from .invariants import euler_small_resolution
from .ledger import cross_check
from .model import Arrangement, ArrangementPoints, ComponentSurface, aggregate_totals, canonical_form

CATALOG_SHA256 = "aa2be8c5cd753baa8a0931707e3151bfeef908024ad3436f692301bfd8ab169e"

CSV_COLUMNS = ("degrees", "p4_0", "p4_1", "p5_0", "p5_1", "p5_2", "l3", "m2", "euler")

# Euler numbers the table realizes above the even interval
EXPECTED_ABOVE_INTERVAL = (108, 112, 116, 120, 136)
EXPECTED_DISTINCT = 206


class CatalogChecksumError(RuntimeError):
    pass


@dataclass(frozen=True)
class RowFamily:
    degrees: tuple[int, ...]
    p4_0: int
    p4_1: int
    p5_0: int
    p5_1: int
    p5_2: int
    l3: int
    m2_range: tuple[int, int]
    euler_range: tuple[int, int]
    node_host: int

    def __post_init__(self):
        if sum(self.degrees) != 8:
            raise ValueError(f"degrees {self.degrees} do not sum to 8")
        lo, hi = self.m2_range
        e_lo, e_hi = self.euler_range
        if not 0 <= lo <= hi:
            raise ValueError(f"bad m2 range {self.m2_range}")
        if e_hi - e_lo != 2 * (hi - lo):
            raise ValueError(f"euler range {self.euler_range} does not step by 2 per node")
        cap = max_nodes(self.degrees[self.node_host])
        if cap is not None and hi > cap:
            raise ValueError(f"{hi} nodes exceed capacity {cap} of the host component")

    @property
    def counters(self) -> tuple[int, ...]:
        return (self.p4_0, self.p4_1, self.p5_0, self.p5_1, self.p5_2, self.l3)

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("degrees", "m2_range", "euler_range"):
            d[key] = list(d[key])
        return d


def _read_catalog_bytes() -> bytes:
    return resources.files("octics").joinpath("data/catalog.json").read_bytes()


def families_from_json(raw: bytes | str) -> list[RowFamily]:
    return [
        RowFamily(
            degrees=tuple(f["degrees"]),
            p4_0=f["p4_0"], p4_1=f["p4_1"], p5_0=f["p5_0"],
            p5_1=f["p5_1"], p5_2=f["p5_2"], l3=f["l3"],
            m2_range=tuple(f["m2_range"]),
            euler_range=tuple(f["euler_range"]),
            node_host=f["node_host"],
        )
        for f in json.loads(raw)
    ]


@lru_cache(maxsize=1)
def _load() -> tuple[RowFamily, ...]:
    raw = _read_catalog_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != CATALOG_SHA256:
        raise CatalogChecksumError(f"catalog.json digest {digest} does not match {CATALOG_SHA256}")
    return tuple(families_from_json(raw))


def load_catalog() -> list[RowFamily]:
    return list(_load())


def expand(f: RowFamily) -> list[tuple[Arrangement, int]]:
    """One arrangement per node count in the family's range, nodes on ``node_host``."""
    lo, hi = f.m2_range
    points = ArrangementPoints(f.p4_0, f.p4_1, f.p5_0, f.p5_1, f.p5_2)
    rows = []
    for k, m2 in enumerate(range(lo, hi + 1)):
        comps = tuple(
            ComponentSurface(d, {2: m2} if i == f.node_host and m2 else {})
            for i, d in enumerate(f.degrees)
        )
        rows.append((Arrangement(comps, points, f.l3), f.euler_range[0] + 2 * k))
    return rows


def expanded_rows() -> list[tuple[Arrangement, int]]:
    return [row for f in load_catalog() for row in expand(f)]


@lru_cache(maxsize=1)
def catalog_arrangements() -> frozenset[Arrangement]:
    return frozenset(canonical_form(a) for a, _ in expanded_rows())


def degrees_label(degrees) -> str:
    return "(" + ",".join(str(d) for d in degrees) + ")"


def export_json(families: list[RowFamily] | None = None) -> str:
    families = load_catalog() if families is None else families
    return json.dumps([f.to_dict() for f in families], indent=2) + "\n"


def export_csv() -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for f in load_catalog():
        for a, e in expand(f):
            w.writerow((degrees_label(f.degrees), *f.counters, aggregate_totals(a).m2, e))
    return buf.getvalue()


@dataclass
class VerificationReport:
    rows_checked: int
    mismatches: list[str]
    validation_failures: list[str]
    ledger_failures: list[str]
    distinct_values: int
    interval_gaps: list[int]
    above_interval: list[int]
    extremes: tuple[int, int]

    @property
    def rows_ok(self) -> bool:
        return not (self.mismatches or self.validation_failures or self.ledger_failures)

    @property
    def claims_ok(self) -> bool:
        return (
            self.distinct_values == EXPECTED_DISTINCT
            and not self.interval_gaps
            and tuple(self.above_interval) == EXPECTED_ABOVE_INTERVAL
        )

    @property
    def ok(self) -> bool:
        return self.rows_ok and self.claims_ok

    def summary(self) -> str:
        lines = [
            f"rows checked: {self.rows_checked}",
            f"formula mismatches: {len(self.mismatches)}",
            f"validation failures: {len(self.validation_failures)}",
            f"ledger failures: {len(self.ledger_failures)}",
            f"distinct Euler numbers: {self.distinct_values}",
            f"even values in [{INTERVAL[0]},{INTERVAL[1]}] missing: {len(self.interval_gaps)}",
            f"values above {INTERVAL[1]}: {self.above_interval}",
            f"extremes: {self.extremes[0]}, {self.extremes[1]}",
        ]
        lines += [f"  mismatch: {m}" for m in self.mismatches]
        lines += [f"  validation: {m}" for m in self.validation_failures]
        lines += [f"  ledger: {m}" for m in self.ledger_failures]
        verdict = "rows OK" if self.rows_ok else "rows FAILED"
        verdict += f", {self.distinct_values} distinct"
        verdict += ", interval covered" if not self.interval_gaps else ", interval NOT covered"
        lines.append(verdict if self.ok else verdict + " -- FAILED")
        return "\n".join(lines) + "\n"


def verify_catalog() -> VerificationReport:
    rows = expanded_rows()
    mismatches, invalid, ledger = [], [], []
    for a, expected in rows:
        label = f"{degrees_label(a.degrees)} counters={a.counters} m2={aggregate_totals(a).m2}"
        got = euler_small_resolution(a)
        if got != expected:
            mismatches.append(f"{label}: formula {got}, table {expected}")
        bad = [v for v in validate(a) if is_blocking([v])]
        if bad:
            invalid.append(f"{label}: " + "; ".join(v.code for v in bad))
        report = cross_check(a)
        if not report.passed:
            ledger.append(f"{label}: " + "; ".join(i.name for i in report.failures()))
    cov = coverage((a, e) for a, e in rows)
    return VerificationReport(
        rows_checked=len(rows),
        mismatches=mismatches,
        validation_failures=invalid,
        ledger_failures=ledger,
        distinct_values=len(cov.distinct_values),
        interval_gaps=cov.interval_gaps,
        above_interval=[v for v in cov.distinct_values if v > INTERVAL[1]],
        extremes=cov.extremes,
    )
