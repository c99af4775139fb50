"""Closed-form invariants.

Numerical data of a surface with only ordinary multiple points, and the Euler
number of the Calabi-Yau double cover of P^3 branched along an octic
arrangement.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .model import OCTIC_DEGREE, Arrangement, aggregate_totals

# increment of e(X^) per unit of each counter
COEFFICIENTS = {
    "p4_0": 4,
    "p4_1": 3,
    "p5_0": 16,
    "p5_1": 18,
    "p5_2": 20,
    "l3": 1,
    "m2": 2,
    "m4": 36,
    "m5": 56,
}

ELIGIBLE_MULTIPLICITIES = frozenset({2, 4, 5})


class EligibilityError(ValueError):
    """Arrangement carries isolated singularities outside the supported types."""


@dataclass(frozen=True)
class SurfaceInvariants:
    c1_squared: int
    c2: int
    euler_B: int
    arithmetic_genus: int


@dataclass(frozen=True)
class EulerNumbers:
    small_resolution: int
    big_resolution: int


def smooth_euler(d: int) -> int:
    """Euler number d^3 - 4d^2 + 6d of a smooth degree-d surface in P^3."""
    return d**3 - 4 * d**2 + 6 * d


def surface_invariants(degree: int, multiple_points: Mapping[int, int] | None = None) -> SurfaceInvariants:
    """c1^2, c2 of the resolved surface, e of the singular one, and p_a.

    >>> surface_invariants(4)
    SurfaceInvariants(c1_squared=0, c2=24, euler_B=24, arithmetic_genus=1)
    """
    d = degree
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"degree must be a positive integer, got {d!r}")
    pts = dict(multiple_points or {})
    for p, m in pts.items():
        if not 2 <= p <= d:
            raise ValueError(f"multiplicity {p} outside [2, {d}]")
        if m < 0:
            raise ValueError(f"negative count {m} for multiplicity {p}")
    c1sq = d * (d - 4) ** 2 - sum((p - 2) ** 2 * p * m for p, m in pts.items())
    c2 = smooth_euler(d) - sum((p - 2) * p**2 * m for p, m in pts.items())
    e = smooth_euler(d) - sum((p - 1) ** 3 * m for p, m in pts.items())
    # math.comb(n, k) is 0 for n < k, which covers planes, quadrics and nodes
    pa = comb(d - 1, 3) - sum(comb(p, 3) * m for p, m in pts.items())
    return SurfaceInvariants(c1sq, c2, e, pa)


def noether_check(s: SurfaceInvariants) -> bool:
    return s.c1_squared + s.c2 == 12 * (s.arithmetic_genus + 1)


def _check_octic(degrees: Sequence[int]) -> None:
    if any(d < 1 for d in degrees) or sum(degrees) != OCTIC_DEGREE:
        raise ValueError(f"degrees {tuple(degrees)} do not sum to {OCTIC_DEGREE}")


def base_euler(degrees: Sequence[int]) -> int:
    """Degree-only part of the Euler number formula.

    Uses power sums instead of explicit pair and triple loops:
    with s_k = sum d_i^k, sum_{i<j} d_i d_j = (s1^2 - s2)/2,
    sum_{i<j} d_i d_j (d_i + d_j) = s1 s2 - s3, and e3 = (s1^3 - 3 s1 s2 + 2 s3)/6.
    """
    _check_octic(degrees)
    s1 = sum(degrees)
    s2 = sum(d * d for d in degrees)
    s3 = sum(d**3 for d in degrees)
    e2 = (s1 * s1 - s2) // 2
    mixed = s1 * s2 - s3
    e3 = (s1**3 - 3 * s1 * s2 + 2 * s3) // 6
    smooth = s3 - 4 * s2 + 6 * s1
    return 8 - smooth + 2 * (4 * e2 - mixed) - e3


def check_eligible(a: Arrangement) -> None:
    for i, c in enumerate(a.components):
        bad = sorted(set(c.isolated_points) - ELIGIBLE_MULTIPLICITIES)
        if bad:
            raise EligibilityError(
                f"components[{i}]: isolated {bad[0]}-fold point is outside the supported types (2, 4, 5)"
            )


def euler_small_resolution(a: Arrangement) -> int:
    """e(X^) for the small resolution of the nodes."""
    check_eligible(a)
    t = aggregate_totals(a)
    k = COEFFICIENTS
    p = a.points
    return (
        base_euler(a.degrees)
        + k["p4_0"] * p.p4_0
        + k["p4_1"] * p.p4_1
        + k["p5_0"] * p.p5_0
        + k["p5_1"] * p.p5_1
        + k["p5_2"] * p.p5_2
        + k["l3"] * a.triple_lines
        + k["m2"] * t.m2
        + k["m4"] * t.m4
        + k["m5"] * t.m5
    )


def euler_big_resolution(a: Arrangement) -> int:
    """e(X~): the nodes are blown up instead, each adding 2."""
    return euler_small_resolution(a) + 2 * aggregate_totals(a).m2


def euler_numbers(a: Arrangement) -> EulerNumbers:
    small = euler_small_resolution(a)
    return EulerNumbers(small, small + 2 * aggregate_totals(a).m2)

