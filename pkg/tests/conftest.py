from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from planecenters.geom import Point

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def P(x, y) -> Point:
    return Point.of(x, y)


def pts(*pairs):
    return [P(x, y) for x, y in pairs]


small_q = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 2, 3, 4]))
points = st.builds(Point, small_q, small_q)


@pytest.fixture
def square():
    return pts((0, 0), (1, 0), (1, 1), (0, 1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
