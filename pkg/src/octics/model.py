"""Combinatorial data model of an octic arrangement with isolated singularities.

An arrangement is a list of component surfaces whose degrees sum to 8, the
counters of 4- and 5-fold arrangement points (split by how many triple curves
pass through them) and the number of triple lines.  Isolated ordinary multiple
points are stored per component and aggregated on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping

OCTIC_DEGREE = 8

POINT_FIELDS = ("p4_0", "p4_1", "p5_0", "p5_1", "p5_2")


class ArrangementError(ValueError):
    """Base class for rejected arrangement documents."""

    kind = "invalid"

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name
        self.message = message


class ArrangementSyntaxError(ArrangementError):
    kind = "syntax"


class ArrangementSchemaError(ArrangementError):
    kind = "schema"


class ArrangementInvariantError(ArrangementError):
    kind = "invariant"


def _check_count(field_name: str, value: Any) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArrangementSchemaError(field_name, f"expected an integer, got {value!r}")
    if value < 0:
        raise ArrangementInvariantError(field_name, f"must be non-negative, got {value}")
    return value


@dataclass(frozen=True)
class ComponentSurface:
    """One irreducible component B_i: its degree and isolated ordinary multiple points."""

    degree: int
    isolated_points: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise ArrangementSchemaError("degree", f"expected an integer, got {self.degree!r}")
        if self.degree < 1:
            raise ArrangementInvariantError("degree", f"must be >= 1, got {self.degree}")
        points = {}
        for p, count in sorted(dict(self.isolated_points).items()):
            key = f"isolated_points.{p}"
            if isinstance(p, bool) or not isinstance(p, int):
                raise ArrangementSchemaError(key, "multiplicity must be an integer")
            _check_count(key, count)
            if p < 2:
                raise ArrangementInvariantError(key, f"multiplicity {p} < 2")
            if p > self.degree:
                raise ArrangementInvariantError(
                    key, f"multiplicity {p} exceeds component degree {self.degree}"
                )
            if count:
                points[p] = count
        object.__setattr__(self, "isolated_points", MappingProxyType(points))

    def count(self, p: int) -> int:
        return self.isolated_points.get(p, 0)

    @property
    def points_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.isolated_points.items()))

    @property
    def sort_key(self) -> tuple:
        return (self.degree, self.points_key)

    def __eq__(self, other):
        if not isinstance(other, ComponentSurface):
            return NotImplemented
        return self.sort_key == other.sort_key

    def __hash__(self):
        return hash(self.sort_key)

    def __repr__(self):
        return f"ComponentSurface({self.degree}, {dict(self.isolated_points)})"


@dataclass(frozen=True)
class ArrangementPoints:
    """Arrangement q-fold points lying on exactly i triple curves, q in {4, 5}."""

    p4_0: int = 0
    p4_1: int = 0
    p5_0: int = 0
    p5_1: int = 0
    p5_2: int = 0

    def __post_init__(self):
        for name in POINT_FIELDS:
            _check_count(f"arrangement_points.{name}", getattr(self, name))

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.p4_0, self.p4_1, self.p5_0, self.p5_1, self.p5_2)


@dataclass(frozen=True)
class SingularityTotals:
    m2: int = 0
    m4: int = 0
    m5: int = 0


@dataclass(frozen=True, eq=False)
class Arrangement:
    components: tuple[ComponentSurface, ...]
    points: ArrangementPoints = ArrangementPoints()
    triple_lines: int = 0

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ArrangementInvariantError("components", "component list is empty")
        for c in comps:
            if not isinstance(c, ComponentSurface):
                raise ArrangementSchemaError("components", f"not a ComponentSurface: {c!r}")
        total = sum(c.degree for c in comps)
        if total != OCTIC_DEGREE:
            raise ArrangementInvariantError(
                "components", f"degree sum {total} ≠ {OCTIC_DEGREE}"
            )
        _check_count("triple_lines", self.triple_lines)
        object.__setattr__(self, "components", comps)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    @property
    def counters(self) -> tuple[int, ...]:
        """(p4_0, p4_1, p5_0, p5_1, p5_2, l3)."""
        return self.points.as_tuple() + (self.triple_lines,)

    @property
    def sort_key(self) -> tuple:
        """Ordering key: degrees, then per-component point maps, then counters."""
        return (
            self.degrees,
            tuple(c.points_key for c in self.components),
            self.counters,
        )

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.sort_key == other.sort_key

    def __hash__(self):
        return hash(self.sort_key)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def replace(self, **changes) -> "Arrangement":
        """Copy with counter fields (p4_0, ..., triple_lines) or components swapped."""
        comps = changes.pop("components", self.components)
        l3 = changes.pop("triple_lines", self.triple_lines)
        pts = {name: getattr(self.points, name) for name in POINT_FIELDS}
        unknown = set(changes) - set(POINT_FIELDS)
        if unknown:
            raise TypeError(f"unknown fields {sorted(unknown)}")
        pts.update(changes)
        return Arrangement(tuple(comps), ArrangementPoints(**pts), l3)


def aggregate_totals(a: Arrangement) -> SingularityTotals:
    return SingularityTotals(
        m2=sum(c.count(2) for c in a.components),
        m4=sum(c.count(4) for c in a.components),
        m5=sum(c.count(5) for c in a.components),
    )


def canonical_form(a: Arrangement) -> Arrangement:
    """Sort components by degree, then by isolated-point map."""
    comps = tuple(sorted(a.components, key=lambda c: c.sort_key))
    return Arrangement(comps, a.points, a.triple_lines)


def arrangement_to_dict(a: Arrangement) -> dict:
    return {
        "components": [
            {
                "degree": c.degree,
                "isolated_points": {str(p): n for p, n in c.points_key},
            }
            for c in a.components
        ],
        "arrangement_points": {name: getattr(a.points, name) for name in POINT_FIELDS},
        "triple_lines": a.triple_lines,
    }


def serialize_arrangement(a: Arrangement) -> str:
    return json.dumps(arrangement_to_dict(a), indent=2) + "\n"


def _exact_keys(obj: Any, where: str, expected: tuple[str, ...]) -> None:
    if not isinstance(obj, dict):
        raise ArrangementSchemaError(where, "expected an object")
    missing = [k for k in expected if k not in obj]
    if missing:
        raise ArrangementSchemaError(f"{where}.{missing[0]}" if where else missing[0], "missing field")
    extra = sorted(set(obj) - set(expected))
    if extra:
        raise ArrangementSchemaError(f"{where}.{extra[0]}" if where else extra[0], "unknown field")


def arrangement_from_dict(doc: Any) -> Arrangement:
    _exact_keys(doc, "", ("components", "arrangement_points", "triple_lines"))
    raw_components = doc["components"]
    if not isinstance(raw_components, list):
        raise ArrangementSchemaError("components", "expected an array")
    comps = []
    for i, raw in enumerate(raw_components):
        where = f"components[{i}]"
        _exact_keys(raw, where, ("degree", "isolated_points"))
        pts_raw = raw["isolated_points"]
        if not isinstance(pts_raw, dict):
            raise ArrangementSchemaError(f"{where}.isolated_points", "expected an object")
        pts = {}
        for key, count in pts_raw.items():
            if not key.isdigit():
                raise ArrangementSchemaError(
                    f"{where}.isolated_points.{key}", "multiplicity key must be a decimal integer"
                )
            pts[int(key)] = _check_count(f"{where}.isolated_points.{key}", count)
        try:
            comps.append(ComponentSurface(raw["degree"], pts))
        except ArrangementError as exc:
            raise type(exc)(f"{where}.{exc.field}", exc.message) from None
    pts_doc = doc["arrangement_points"]
    _exact_keys(pts_doc, "arrangement_points", POINT_FIELDS)
    points = ArrangementPoints(**pts_doc)
    return Arrangement(tuple(comps), points, doc["triple_lines"])


def parse_arrangement(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementSyntaxError("document", f"malformed JSON ({exc})") from None
    return arrangement_from_dict(doc)


def make_arrangement(
    degrees,
    nodes: Mapping[int, int] | None = None,
    triple_lines: int = 0,
    **points: int,
) -> Arrangement:
    """Convenience constructor.

    ``nodes`` maps component index to its isolated node count; other isolated
    multiplicities need explicit :class:`ComponentSurface` objects.
    """
    nodes = nodes or {}
    comps = tuple(
        ComponentSurface(d, {2: nodes[i]} if nodes.get(i) else {}) for i, d in enumerate(degrees)
    )
    return Arrangement(comps, ArrangementPoints(**points), triple_lines)
