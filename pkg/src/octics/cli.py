"""Command-line interface.

Exit status: 0 on success, 1 when a precondition or validation fails,
2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict

from . import catalog, enumerator, feasibility, invariants, ledger
from .model import (
    Arrangement,
    ArrangementError,
    ArrangementInvariantError,
    ArrangementPoints,
    ComponentSurface,
    parse_arrangement,
)

EXIT_OK, EXIT_FAIL, EXIT_IO = 0, 1, 2


class CLIError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read_arrangement(path: str) -> Arrangement:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    try:
        return parse_arrangement(text)
    except ArrangementInvariantError as exc:
        raise CLIError(f"invariant error: {exc}", EXIT_FAIL) from None
    except ArrangementError as exc:
        raise CLIError(f"{exc.kind} error: {exc}", EXIT_IO) from None


def _emit(text: str, out: str | None = None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(f"cannot write {out}: {exc.strerror}", EXIT_IO) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_euler(args) -> int:
    a = _read_arrangement(args.file)
    try:
        nums = invariants.euler_numbers(a)
    except invariants.EligibilityError as exc:
        raise CLIError(f"ineligible: {exc}", EXIT_FAIL) from None
    value = nums.small_resolution if args.mode == "small" else nums.big_resolution
    if args.json:
        _emit(_dump({"mode": args.mode, "euler": value, **asdict(nums)}))
    else:
        _emit(f"{value}\n")
    return EXIT_OK


def _parse_points(text: str | None) -> dict[int, int]:
    pts: dict[int, int] = {}
    if not text:
        return pts
    for item in text.split(","):
        try:
            p, n = item.split(":")
            pts[int(p)] = pts.get(int(p), 0) + int(n)
        except ValueError:
            raise CLIError(f"--points: cannot parse {item!r}, expected p:count", EXIT_IO) from None
    return pts


def cmd_invariants(args) -> int:
    pts = _parse_points(args.points)
    try:
        s = invariants.surface_invariants(args.degree, pts)
    except ValueError as exc:
        raise CLIError(f"precondition: {exc}", EXIT_FAIL) from None
    if args.json:
        _emit(_dump({**asdict(s), "noether": invariants.noether_check(s)}))
    else:
        _emit(f"c1^2={s.c1_squared} c2={s.c2} e={s.euler_B} pa={s.arithmetic_genus}\n")
    return EXIT_OK


def cmd_trace(args) -> int:
    a = _read_arrangement(args.file)
    try:
        trace = ledger.build_trace(a)
    except invariants.EligibilityError as exc:
        raise CLIError(f"ineligible: {exc}", EXIT_FAIL) from None
    report = ledger.cross_check(a)
    lines = [ledger.render_trace(trace, a)]
    for item in report.items:
        mark = "ok " if item.passed else "FAIL"
        lines.append(f"[{mark}] {item.name}: expected {item.expected}, got {item.actual}\n")
    lines.append("cross-check: " + ("PASS" if report.passed else "FAIL") + "\n")
    _emit("".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_validate(args) -> int:
    a = _read_arrangement(args.file)
    vs = feasibility.validate(a, allow_unknown_bounds=args.allow_unknown_bounds)
    if args.json:
        _emit(feasibility.violations_to_json(vs))
    elif not vs:
        _emit("no violations\n")
    else:
        _emit("".join(f"{v.severity.value}: [{v.code}] {v.message}\n" for v in vs))
    return EXIT_FAIL if feasibility.is_blocking(vs) else EXIT_OK


def cmd_verify_table(args) -> int:
    report = catalog.verify_catalog()
    if args.json:
        _emit(_dump({**asdict(report), "ok": report.ok}))
    else:
        _emit(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def _bounds_from_args(args) -> enumerator.SearchBounds:
    partitions = None
    if args.partition:
        try:
            partitions = tuple(tuple(int(x) for x in p.split(",")) for p in args.partition)
        except ValueError:
            raise CLIError("--partition expects comma-separated degrees", EXIT_IO) from None
    try:
        return enumerator.SearchBounds(
            max_counter=tuple(getattr(args, f"max_{name}") for name in enumerator.COUNTER_NAMES),
            node_policy=args.node_policy,
            allow_m45=args.allow_m45,
            restrict_to_necessary=not args.no_restrict,
            max_isolated_high=args.max_isolated_high,
            partitions=partitions,
        )
    except ValueError as exc:
        raise CLIError(f"bounds: {exc}", EXIT_FAIL) from None


def cmd_enumerate(args) -> int:
    b = _bounds_from_args(args)
    jobs = args.jobs or enumerator.default_jobs()
    if args.out == "-":
        n = enumerator.write_csv(sys.stdout, b, jobs)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                n = enumerator.write_csv(fh, b, jobs)
        except OSError as exc:
            raise CLIError(f"cannot write {args.out}: {exc.strerror}", EXIT_IO) from None
        print(f"{n} rows written to {args.out}", file=sys.stderr)
    return EXIT_OK


def _place(degrees: tuple[int, ...], m2: int, m4: int, m5: int) -> tuple[ComponentSurface, ...]:
    """Spread isolated points over components, largest degree first, within node capacity."""
    pts = [dict() for _ in degrees]
    order = sorted(range(len(degrees)), key=lambda i: (-degrees[i], -i))
    left = m2
    for i in order:
        cap = feasibility.max_nodes(degrees[i]) or 0
        take = min(cap, left)
        if take:
            pts[i][2] = take
            left -= take
    if left:
        pts[order[0]][2] = pts[order[0]].get(2, 0) + left
    for p, count in ((4, m4), (5, m5)):
        if count:
            pts[order[0]][p] = count
    return tuple(ComponentSurface(d, pm) for d, pm in zip(degrees, pts))


def _rows_from_csv(path: str):
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    with fh:
        reader = csv.DictReader(fh)
        for lineno, row in enumerate(reader, start=2):
            try:
                degrees = tuple(int(x) for x in row["degrees"].strip("()").split(","))
                counters = [int(row[name]) for name in enumerator.COUNTER_NAMES]
                m2, m4, m5 = int(row["m2"]), int(row.get("m4") or 0), int(row.get("m5") or 0)
                e = int(row["euler"])
                comps = _place(degrees, m2, m4, m5)
                a = Arrangement(comps, ArrangementPoints(*counters[:5]), counters[5])
            except (KeyError, ValueError, TypeError) as exc:
                raise CLIError(f"{path}:{lineno}: cannot parse row ({exc})", EXIT_IO) from None
            yield a, e


def cmd_coverage(args) -> int:
    if args.source == "catalog":
        report = enumerator.coverage(catalog.expanded_rows())
    elif args.source == "search":
        report = enumerator.coverage_of_search(enumerator.SearchBounds(), args.jobs or 1)
    else:
        report = enumerator.coverage(_rows_from_csv(args.source))
    if args.json:
        _emit(_dump(report.to_dict()), args.out)
        return EXIT_OK
    lo, hi = enumerator.INTERVAL
    text = [
        f"distinct values: {len(report.distinct_values)}\n",
        f"extremes: {report.extremes}\n",
        f"even values in [{lo},{hi}] not achieved: {len(report.interval_gaps)}\n",
    ]
    if report.interval_gaps:
        text.append("gaps: " + " ".join(map(str, report.interval_gaps)) + "\n")
    text.append("values: " + " ".join(map(str, report.distinct_values)) + "\n")
    _emit("".join(text), args.out)
    return EXIT_OK


def cmd_export_catalog(args) -> int:
    text = catalog.export_json() if args.format == "json" else catalog.export_csv()
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octics",
        description="Euler numbers of Calabi-Yau double covers of P^3 branched along octic arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("euler", help="Euler number of the resolved double cover")
    p.add_argument("file", help="arrangement JSON document ('-' for stdin)")
    p.add_argument("--mode", choices=("small", "big"), default="small")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("invariants", help="numerical data of a surface with ordinary multiple points")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--points", help="comma-separated multiplicity:count pairs, e.g. 2:4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("trace", help="print the resolution ledger and its cross-check")
    p.add_argument("file")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("validate", help="check necessary conditions and known bounds")
    p.add_argument("file")
    p.add_argument("--allow-unknown-bounds", action="store_true",
                   help="report node-capacity violations as warnings")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify-table", help="verify the embedded table and its coverage claims")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("enumerate", help="search the configuration space and write CSV")
    for name, default in zip(enumerator.COUNTER_NAMES, enumerator.CATALOG_MAX_COUNTERS):
        p.add_argument(f"--max-{name.replace('_', '-')}", dest=f"max_{name}", type=int, default=default)
    p.add_argument("--node-policy", choices=[n.value for n in enumerator.NodePolicy],
                   default=enumerator.NodePolicy.CATALOG_CAPACITIES.value)
    p.add_argument("--allow-m45", action="store_true", help="also place isolated 4- and 5-fold points")
    p.add_argument("--max-isolated-high", type=int, default=1)
    p.add_argument("--no-restrict", action="store_true", help="keep configurations failing necessary conditions")
    p.add_argument("--partition", action="append", help="restrict to a partition, e.g. 1,1,2,4 (repeatable)")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")
    p.add_argument("--out", required=True, help="CSV path ('-' for stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coverage", help="Euler-number coverage report")
    p.add_argument("--from", dest="source", default="catalog",
                   help="'catalog', 'search' (default bounds) or a CSV file from enumerate")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("export-catalog", help="dump the embedded table")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"octics {args.command}: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
