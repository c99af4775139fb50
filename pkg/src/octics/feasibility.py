"""Necessary conditions and known bounds for octic arrangements.

``validate`` never decides realizability.  It reports three kinds of finding:

* ``Error``: contradicts a known bound (node capacities) or a type invariant;
* ``Ineligible``: outside the singularity types the Euler formula covers;
* ``Warning``: a failed necessary condition, or, when everything passes, the
  reminder that a configuration outside the embedded catalog is not certified.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .invariants import ELIGIBLE_MULTIPLICITIES
from .model import Arrangement, canonical_form

# Largest node count with a known nodal surface for each degree; 5 and 7 unknown.
_NODE_CAPACITY = {1: 0, 2: 1, 3: 4, 4: 16, 6: 65, 8: 107}

UNKNOWN = None


class Severity(str, enum.Enum):
    ERROR = "Error"
    INELIGIBLE = "Ineligible"
    WARNING = "Warning"


@dataclass(frozen=True)
class Violation:
    severity: Severity
    code: str
    message: str

    def __post_init__(self):
        if not self.code:
            raise ValueError("violation code must be non-empty")

    def to_dict(self) -> dict:
        return {"severity": self.severity.value, "code": self.code, "message": self.message}


def max_nodes(degree: int) -> int | None:
    """Node capacity for a component of the given degree, ``None`` when unknown."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    return _NODE_CAPACITY.get(degree, UNKNOWN)


def _is_catalog_member(a: Arrangement) -> bool:
    from .catalog import catalog_arrangements

    return canonical_form(a) in catalog_arrangements()


def necessary_violations(a: Arrangement, allow_unknown_bounds: bool = False) -> list[Violation]:
    """All findings except the realizability reminder, sorted by code."""
    out = []
    capacity_severity = Severity.WARNING if allow_unknown_bounds else Severity.ERROR
    r = len(a.components)
    for i, c in enumerate(a.components):
        where = f"components[{i}] (degree {c.degree})"
        for p in c.isolated_points:
            if p > c.degree:
                out.append(Violation(Severity.ERROR, "multiplicity-exceeds-degree",
                                     f"{where}: isolated {p}-fold point on a degree-{c.degree} surface"))
            if p not in ELIGIBLE_MULTIPLICITIES:
                out.append(Violation(Severity.INELIGIBLE, "multiplicity-unsupported",
                                     f"{where}: isolated {p}-fold points are not covered; only 2, 4, 5"))
        if c.count(4) and c.degree < 4:
            out.append(Violation(Severity.INELIGIBLE, "fourfold-low-degree",
                                 f"{where}: isolated 4-fold point needs degree >= 4"))
        if c.count(5) and c.degree < 5:
            out.append(Violation(Severity.INELIGIBLE, "fivefold-low-degree",
                                 f"{where}: isolated 5-fold point needs degree >= 5"))
        nodes = c.count(2)
        if nodes:
            cap = max_nodes(c.degree)
            if cap is UNKNOWN:
                out.append(Violation(Severity.WARNING, "nodes-unknown-capacity",
                                     f"{where}: {nodes} nodes, no known node bound for degree {c.degree}"))
            elif nodes > cap:
                out.append(Violation(capacity_severity, "nodes-exceed-capacity",
                                     f"{where}: {nodes} nodes exceed the bound {cap} for degree {c.degree}"))
    pts = a.points
    if (pts.p4_0 or pts.p4_1) and r < 4:
        out.append(Violation(Severity.WARNING, "fourfold-point-needs-components",
                             f"4-fold arrangement point needs >= 4 components, have {r}"))
    if (pts.p5_0 or pts.p5_1 or pts.p5_2) and r < 5:
        out.append(Violation(Severity.WARNING, "fivefold-point-needs-components",
                             f"5-fold point needs >= 5 components, have {r}"))
    if (pts.p4_1 or pts.p5_1) and a.triple_lines < 1:
        out.append(Violation(Severity.WARNING, "point-needs-triple-line",
                             "points on one triple curve need l3 >= 1"))
    if pts.p5_2 and a.triple_lines < 2:
        out.append(Violation(Severity.WARNING, "point-needs-two-triple-lines",
                             "points on two triple curves need l3 >= 2"))
    if a.triple_lines and r < 3:
        out.append(Violation(Severity.WARNING, "triple-line-needs-components",
                             f"a triple line needs >= 3 components, have {r}"))
    out.sort(key=lambda v: (v.code, v.message))
    return out


def validate(a: Arrangement, allow_unknown_bounds: bool = False) -> list[Violation]:
    out = necessary_violations(a, allow_unknown_bounds)
    if not out and not _is_catalog_member(a):
        out.append(Violation(Severity.WARNING, "not-certified-realizable",
                             "passes necessary conditions only; not certified realizable"))
    return out


def is_blocking(violations: list[Violation]) -> bool:
    return any(v.severity in (Severity.ERROR, Severity.INELIGIBLE) for v in violations)


def violations_to_json(violations: list[Violation]) -> str:
    return json.dumps([v.to_dict() for v in violations], indent=2) + "\n"

