import random

import pytest

from octics.model import Arrangement, ArrangementPoints, ComponentSurface


def pytest_terminal_summary(terminalreporter):
    # one line per criterion; a teardown failure (time limit) marks it FAIL
    merged = {}
    for outcome in ("passed", "failed", "error", ""):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" not in props:
                continue
            entry = merged.setdefault(rep.nodeid, {"ok": True, "props": {}})
            entry["ok"] &= outcome in ("passed", "")
            entry["props"].update(props)
    if merged:
        terminalreporter.section("acceptance criteria")
        for entry in sorted(merged.values(), key=lambda e: e["props"]["criterion"]):
            verdict = "PASS" if entry["ok"] else "FAIL"
            props = entry["props"]
            terminalreporter.write_line(f"{verdict}  {props['criterion']}  {props.get('detail', '')}".rstrip())


@pytest.fixture
def rng():
    return random.Random(20261015)


def random_partition(rng, n=8):
    parts = []
    while n:
        k = rng.randint(1, n)
        parts.append(k)
        n -= k
    return parts


def random_eligible(rng, max_counter=5, max_isolated=3):
    """Random arrangement whose isolated points are all 2-, 4- or 5-fold."""
    comps = []
    for d in random_partition(rng):
        pts = {2: rng.randint(0, 6)} if d >= 2 else {}
        if d >= 4:
            pts[4] = rng.randint(0, max_isolated)
        if d >= 5:
            pts[5] = rng.randint(0, max_isolated)
        comps.append(ComponentSurface(d, pts))
    counters = [rng.randint(0, max_counter) for _ in range(5)]
    return Arrangement(tuple(comps), ArrangementPoints(*counters), rng.randint(0, max_counter))
