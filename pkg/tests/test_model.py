import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octics.model import (
    Arrangement,
    ArrangementInvariantError,
    ArrangementPoints,
    ArrangementSchemaError,
    ArrangementSyntaxError,
    ComponentSurface,
    SingularityTotals,
    aggregate_totals,
    arrangement_to_dict,
    canonical_form,
    make_arrangement,
    parse_arrangement,
    serialize_arrangement,
)


def doc(components, triple_lines=0, **points):
    pts = {k: points.get(k, 0) for k in ("p4_0", "p4_1", "p5_0", "p5_1", "p5_2")}
    return json.dumps({
        "components": [{"degree": d, "isolated_points": {str(p): n for p, n in ip.items()}} for d, ip in components],
        "arrangement_points": pts,
        "triple_lines": triple_lines,
    })


def test_parse_minimal_octic():
    a = parse_arrangement(doc([(8, {})]))
    assert a.degrees == (8,)
    assert a.counters == (0,) * 6


def test_parse_1124_row():
    a = parse_arrangement(doc([(1, {}), (1, {}), (2, {}), (4, {})], p4_0=1))
    assert a.degrees == (1, 1, 2, 4)
    assert a.points.p4_0 == 1


def test_parse_rejects_degree_sum():
    with pytest.raises(ArrangementInvariantError, match="degree sum 9 ≠ 8") as exc:
        parse_arrangement(doc([(1, {}), (1, {}), (2, {}), (5, {})]))
    assert exc.value.field == "components"


def test_parse_rejects_multiplicity_above_degree():
    with pytest.raises(ArrangementInvariantError) as exc:
        parse_arrangement(doc([(3, {4: 1}), (5, {})]))
    assert exc.value.field == "components[0].isolated_points.4"


def test_parse_syntax_error():
    with pytest.raises(ArrangementSyntaxError):
        parse_arrangement("{not json")


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.pop("triple_lines"), "triple_lines"),
    (lambda d: d.update(extra=1), "extra"),
    (lambda d: d["arrangement_points"].update(p6_0=1), "arrangement_points.p6_0"),
    (lambda d: d["components"][0].pop("isolated_points"), "components[0].isolated_points"),
    (lambda d: d["components"][0].update(color="red"), "components[0].color"),
])
def test_parse_schema_errors_name_field(mutate, field):
    d = json.loads(doc([(8, {})]))
    mutate(d)
    with pytest.raises(ArrangementSchemaError) as exc:
        parse_arrangement(json.dumps(d))
    assert exc.value.field == field


def test_parse_rejects_non_integer_and_negative():
    d = json.loads(doc([(8, {})]))
    d["triple_lines"] = 1.5
    with pytest.raises(ArrangementSchemaError):
        parse_arrangement(json.dumps(d))
    d["triple_lines"] = -1
    with pytest.raises(ArrangementInvariantError):
        parse_arrangement(json.dumps(d))


def test_empty_components_rejected():
    with pytest.raises(ArrangementInvariantError):
        Arrangement((), ArrangementPoints(), 0)


def test_aggregate_totals():
    a = make_arrangement([8], nodes={0: 107})
    assert aggregate_totals(a) == SingularityTotals(107, 0, 0)
    b = make_arrangement([4, 4], nodes={0: 3, 1: 1})
    assert aggregate_totals(b).m2 == 4
    c = Arrangement((ComponentSurface(1), ComponentSurface(1), ComponentSurface(6, {4: 2, 5: 1})))
    t = aggregate_totals(c)
    assert (t.m2, t.m4, t.m5) == (0, 2, 1)


def test_zero_counts_are_dropped():
    assert ComponentSurface(4, {2: 0}) == ComponentSurface(4)


def test_canonical_form_sorts():
    a = make_arrangement([4, 2, 1, 1])
    assert canonical_form(a).degrees == (1, 1, 2, 4)
    c = canonical_form(a)
    assert canonical_form(c).components == c.components


@st.composite
def arrangements(draw):
    degrees = draw(st.lists(st.integers(1, 4), min_size=1, max_size=8).filter(lambda ds: sum(ds) <= 8))
    degrees = degrees + [1] * (8 - sum(degrees))
    comps = []
    for d in degrees:
        pts = {}
        for p in range(2, d + 1):
            pts[p] = draw(st.integers(0, 3))
        comps.append(ComponentSurface(d, pts))
    counters = draw(st.lists(st.integers(0, 5), min_size=6, max_size=6))
    return Arrangement(tuple(comps), ArrangementPoints(*counters[:5]), counters[5])


@given(arrangements(), st.randoms())
def test_canonical_form_permutation_invariant(a, rnd):
    comps = list(a.components)
    rnd.shuffle(comps)
    b = Arrangement(tuple(comps), a.points, a.triple_lines)
    assert canonical_form(b).sort_key == canonical_form(a).sort_key
    assert canonical_form(canonical_form(a)).sort_key == canonical_form(a).sort_key


@given(arrangements())
def test_round_trip(a):
    c = canonical_form(a)
    back = parse_arrangement(serialize_arrangement(c))
    assert back.sort_key == c.sort_key
    assert arrangement_to_dict(back) == arrangement_to_dict(c)
