import json

import pytest

from octics.catalog import expanded_rows
from octics.feasibility import Severity, is_blocking, max_nodes, validate, violations_to_json
from octics.model import Arrangement, ComponentSurface, make_arrangement


def codes(vs, severity=None):
    return [v.code for v in vs if severity is None or v.severity is severity]


@pytest.mark.parametrize("degree, expected", [
    (1, 0), (2, 1), (3, 4), (4, 16), (5, None), (6, 65), (7, None), (8, 107),
])
def test_max_nodes(degree, expected):
    assert max_nodes(degree) == expected


def test_max_nodes_monotone_where_known():
    known = [max_nodes(d) for d in (1, 2, 3, 4, 6, 8)]
    assert known == sorted(known)


def test_cubic_with_five_nodes_is_error():
    a = make_arrangement([1, 1, 1, 1, 1, 3], nodes={5: 5})
    vs = validate(a)
    assert codes(vs, Severity.ERROR) == ["nodes-exceed-capacity"]
    assert is_blocking(vs)


def test_allow_unknown_bounds_downgrades_capacity_error():
    a = make_arrangement([1, 1, 1, 1, 1, 3], nodes={5: 5})
    vs = validate(a, allow_unknown_bounds=True)
    assert codes(vs) == ["nodes-exceed-capacity"]
    assert vs[0].severity is Severity.WARNING
    assert not is_blocking(vs)


def test_fivefold_point_needs_five_components():
    a = make_arrangement([1, 1, 2, 4], p5_0=1)
    vs = validate(a)
    assert codes(vs, Severity.WARNING) == ["fivefold-point-needs-components"]
    assert "5 components" in vs[0].message
    assert not is_blocking(vs)


def test_isolated_triple_point_is_ineligible():
    a = Arrangement((ComponentSurface(8, {3: 1}),))
    vs = validate(a)
    assert codes(vs, Severity.INELIGIBLE) == ["multiplicity-unsupported"]
    assert is_blocking(vs)


def test_triple_line_conditions():
    assert "point-needs-triple-line" in codes(validate(make_arrangement([1] * 8, p4_1=1)))
    assert "point-needs-two-triple-lines" in codes(validate(make_arrangement([1] * 8, p5_2=1, triple_lines=1)))
    assert "triple-line-needs-components" in codes(validate(make_arrangement([4, 4], triple_lines=1)))
    assert "fourfold-point-needs-components" in codes(validate(make_arrangement([2, 6], p4_0=1)))


def test_unknown_capacity_nodes_warn():
    a = make_arrangement([1, 7], nodes={1: 3})
    assert codes(validate(a)) == ["nodes-unknown-capacity"]


def test_non_catalog_gets_realizability_warning():
    vs = validate(make_arrangement([4, 4]))
    assert codes(vs) == ["not-certified-realizable"]
    assert vs[0].severity is Severity.WARNING


def test_catalog_rows_clean():
    for a, _ in expanded_rows():
        assert validate(a) == []


def test_catalog_membership_is_permutation_invariant():
    a = make_arrangement([4, 2, 1, 1], nodes={0: 16}, p4_0=1)
    assert validate(a) == []


def test_violations_sorted_and_deterministic():
    a = Arrangement((ComponentSurface(1), ComponentSurface(7, {3: 1, 2: 4})),
                    triple_lines=1)
    vs = validate(a.replace(p4_1=1, p5_2=1))
    assert codes(vs) == sorted(codes(vs))
    assert vs == validate(a.replace(p4_1=1, p5_2=1))


def test_violation_json():
    vs = validate(make_arrangement([1, 1, 1, 1, 1, 3], nodes={5: 5}))
    assert json.loads(violations_to_json(vs)) == [
        {"severity": "Error", "code": "nodes-exceed-capacity",
         "message": vs[0].message},
    ]
