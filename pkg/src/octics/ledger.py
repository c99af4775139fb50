"""Replay of the resolution of singularities as an Euler-number ledger.

The arrangement part of the resolution (double and triple curves, 4- and
5-fold arrangement points) is not replayed blow-up by blow-up; it is one
``ArrangementBlock`` step, and its contribution enters through a closure
constant computed from the arrangement with its isolated points removed.
Isolated points are replayed individually with fixed deltas:

================== ========== ==========
step               d e(P*)    d e(B*)
================== ========== ==========
IsolatedNode        +2          0
Isolated4Fold       +2        -32
Isolated5FoldPoint  +2         -2
Isolated5FoldCurve -10        -70
================== ========== ==========

The ambient deltas are those of blowing up a point (+2) or a smooth plane
quintic of genus 6 (e = -10).  Nodes are blown up in the ambient space, which
yields the big resolution X~; the small resolution is 2 per node lower.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .invariants import COEFFICIENTS, check_eligible, euler_small_resolution, smooth_euler
from .model import Arrangement, ComponentSurface, aggregate_totals

P3_EULER = 4


class StepKind(str, enum.Enum):
    ARRANGEMENT_BLOCK = "ArrangementBlock"
    ISOLATED_4FOLD = "Isolated4Fold"
    ISOLATED_5FOLD_POINT = "Isolated5FoldPoint"
    ISOLATED_5FOLD_CURVE = "Isolated5FoldCurve"
    ISOLATED_NODE = "IsolatedNode"


_DELTAS = {
    StepKind.ISOLATED_NODE: (2, 0),
    StepKind.ISOLATED_4FOLD: (2, -32),
    StepKind.ISOLATED_5FOLD_POINT: (2, -2),
    StepKind.ISOLATED_5FOLD_CURVE: (-10, -70),
    StepKind.ARRANGEMENT_BLOCK: (0, 0),
}

_NOTES = {
    StepKind.ARRANGEMENT_BLOCK: "step 1: arrangement curves and points, resolved as a block",
    StepKind.ISOLATED_4FOLD: "blow up the point; branch locus := strict transform",
    StepKind.ISOLATED_5FOLD_POINT: "blow up the point; branch locus := strict transform + exceptional divisor",
    StepKind.ISOLATED_5FOLD_CURVE: "blow up the plane quintic as a double curve; branch locus := strict transform",
    StepKind.ISOLATED_NODE: "blow up the node (big resolution)",
}


class LedgerMismatchError(ValueError):
    """A trace does not belong to the arrangement it is replayed against."""


def step_deltas(kind: StepKind) -> tuple[int, int]:
    """(change of e(P*), change of e(B*)) for one step of the given kind.

    The block step carries no deltas itself; see :func:`closure_constant`.
    """
    return _DELTAS[StepKind(kind)]


@dataclass(frozen=True)
class ResolutionStep:
    kind: StepKind
    ambient_delta: int
    branch_delta: int
    center: str
    note: str


@dataclass(frozen=True)
class ResolutionTrace:
    steps: tuple[ResolutionStep, ...]

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def kinds(self) -> list[StepKind]:
        return [s.kind for s in self.steps]


@dataclass(frozen=True)
class LedgerState:
    ambient_euler: int
    branch_euler: int
    residual_nodes: int


def _step(kind: StepKind, center: str) -> ResolutionStep:
    amb, br = _DELTAS[kind]
    return ResolutionStep(kind, amb, br, center, _NOTES[kind])


def build_trace(a: Arrangement) -> ResolutionTrace:
    """Steps in resolution order: block, 4-fold points, 5-fold points, nodes."""
    check_eligible(a)
    steps = [_step(StepKind.ARRANGEMENT_BLOCK, f"{len(a.components)} components, l3={a.triple_lines}")]
    for kind_pair, p in (((StepKind.ISOLATED_4FOLD,), 4),
                         ((StepKind.ISOLATED_5FOLD_POINT, StepKind.ISOLATED_5FOLD_CURVE), 5),
                         ((StepKind.ISOLATED_NODE,), 2)):
        for i, c in enumerate(a.components):
            for n in range(c.count(p)):
                center = f"{p}-fold point #{n + 1} on component {i} (degree {c.degree})"
                for kind in kind_pair:
                    steps.append(_step(kind, center))
    return ResolutionTrace(tuple(steps))


def branch_baseline(a: Arrangement) -> int:
    """Sum of e over smooth models of the components, isolated points excluded."""
    return sum(smooth_euler(c.degree) for c in a.components)


def initial_state(a: Arrangement) -> LedgerState:
    return LedgerState(P3_EULER, branch_baseline(a), aggregate_totals(a).m2)


def _expected_kinds(a: Arrangement) -> dict[StepKind, int]:
    t = aggregate_totals(a)
    return {
        StepKind.ARRANGEMENT_BLOCK: 1,
        StepKind.ISOLATED_4FOLD: t.m4,
        StepKind.ISOLATED_5FOLD_POINT: t.m5,
        StepKind.ISOLATED_5FOLD_CURVE: t.m5,
        StepKind.ISOLATED_NODE: t.m2,
    }


def replay(trace: ResolutionTrace, a: Arrangement) -> LedgerState:
    """Fold the step deltas into the running (e(P*), e(B*), nodes) state."""
    kinds = trace.kinds()
    counts = {k: kinds.count(k) for k in StepKind}
    if counts != _expected_kinds(a):
        raise LedgerMismatchError(f"trace step counts {counts} do not match the arrangement")
    for i, k in enumerate(kinds):
        if k is StepKind.ISOLATED_5FOLD_POINT and (i + 1 >= len(kinds) or kinds[i + 1] is not StepKind.ISOLATED_5FOLD_CURVE):
            raise LedgerMismatchError(f"step {i}: 5-fold point blow-up not followed by its curve")
        if k is StepKind.ISOLATED_5FOLD_CURVE and (i == 0 or kinds[i - 1] is not StepKind.ISOLATED_5FOLD_POINT):
            raise LedgerMismatchError(f"step {i}: 5-fold curve blow-up without its point")
    state = initial_state(a)
    for s in trace:
        state = LedgerState(
            state.ambient_euler + s.ambient_delta,
            state.branch_euler + s.branch_delta,
            state.residual_nodes,
        )
    return state


def strip_isolated(a: Arrangement) -> Arrangement:
    return Arrangement(tuple(ComponentSurface(c.degree) for c in a.components), a.points, a.triple_lines)


def closure_constant(a: Arrangement) -> int:
    """What the arrangement block contributes beyond 2 e(P^3) - e(smooth branch)."""
    return euler_small_resolution(strip_isolated(a)) - (2 * P3_EULER - branch_baseline(a))


def euler_from_ledger(state: LedgerState, a: Arrangement, mode: str = "small") -> int:
    big = 2 * state.ambient_euler - state.branch_euler + closure_constant(a)
    if mode == "big":
        return big
    if mode == "small":
        return big - 2 * state.residual_nodes
    raise ValueError(f"mode must be 'small' or 'big', got {mode!r}")


@dataclass(frozen=True)
class CheckItem:
    name: str
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ConsistencyReport:
    items: tuple[CheckItem, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.passed]


def _contribution(*kinds: StepKind, small_correction: int = 0) -> int:
    amb = sum(_DELTAS[k][0] for k in kinds)
    br = sum(_DELTAS[k][1] for k in kinds)
    return 2 * amb - br - small_correction


def cross_check(a: Arrangement) -> ConsistencyReport:
    """Compare the replayed ledger with the closed-form Euler numbers."""
    state = replay(build_trace(a), a)
    m2 = aggregate_totals(a).m2
    small = euler_from_ledger(state, a, "small")
    big = euler_from_ledger(state, a, "big")
    items = (
        CheckItem("node contribution", COEFFICIENTS["m2"],
                  _contribution(StepKind.ISOLATED_NODE, small_correction=2)),
        CheckItem("4-fold contribution", COEFFICIENTS["m4"],
                  _contribution(StepKind.ISOLATED_4FOLD)),
        CheckItem("5-fold contribution", COEFFICIENTS["m5"],
                  _contribution(StepKind.ISOLATED_5FOLD_POINT, StepKind.ISOLATED_5FOLD_CURVE)),
        CheckItem("e(X^) ledger vs formula", euler_small_resolution(a), small),
        CheckItem("e(X~) - e(X^) = 2 m2", 2 * m2, big - small),
        CheckItem("residual nodes = m2", m2, state.residual_nodes),
    )
    return ConsistencyReport(items)


def render_trace(trace: ResolutionTrace, a: Arrangement) -> str:
    """One line per step with its deltas and the running totals."""
    state = initial_state(a)
    lines = [f"  -  start                e(P*)={state.ambient_euler} e(B*)={state.branch_euler}"]
    for i, s in enumerate(trace):
        state = LedgerState(state.ambient_euler + s.ambient_delta,
                            state.branch_euler + s.branch_delta, state.residual_nodes)
        lines.append(
            f"{i:3d}  {s.kind.value:<19} {s.center} | {s.note} "
            f"(dP={s.ambient_delta:+d}, dB={s.branch_delta:+d}) "
            f"e(P*)={state.ambient_euler} e(B*)={state.branch_euler}"
        )
    return "\n".join(lines) + "\n"
