import math
import random
from fractions import Fraction

import pytest

from planewheel.wheelgeom import (
    PointSet,
    _rational_circle_point,
    build_bumpy_wheel,
    build_generalized_wheel,
    hull_and_interior,
    in_general_position,
)


def compositions(total, parts):
    """All ordered compositions of total into the given number of positive parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def wheel_matrix(max_hull):
    """Every generalized wheel size vector with odd hull total <= max_hull."""
    out = []
    for h in range(3, max_hull + 1, 2):
        for k in range(3, h + 1, 2):
            out.extend(compositions(h, k))
    return out


def random_one_interior_set(rng: random.Random) -> PointSet:
    """Random general-position point set with exactly one interior point:
    an odd number of hull points near the unit circle plus a point near the
    center."""
    while True:
        nh = rng.choice([3, 5, 7, 9, 11])
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(nh))
        pts = [_rational_circle_point(a, 10**4) for a in angles]
        pts.append((Fraction(rng.randint(-50, 50), 1000), Fraction(rng.randint(-50, 50), 1000)))
        ps = PointSet(points=tuple(pts), interior_index=nh)
        _, interior = hull_and_interior(ps)
        if interior == [nh] and in_general_position(ps):
            return ps


# one pass/fail verdict line per acceptance criterion, in the summary
_criteria: dict[str, object] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    parts = name.split("_")
    if report.when == "call" and name.startswith("test_criterion_") and parts[2].isdigit():
        _criteria[name] = report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        rep = _criteria[name]
        verdict = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict} ({rep.duration:.1f}s)")


@pytest.fixture(scope="session")
def bw33():
    return build_bumpy_wheel(3, 3)


@pytest.fixture(scope="session")
def bw35():
    return build_bumpy_wheel(3, 5)


@pytest.fixture(scope="session")
def bw53():
    return build_bumpy_wheel(5, 3)


@pytest.fixture(scope="session")
def gw_mixed():
    return build_generalized_wheel([2, 3, 3, 4, 3])
