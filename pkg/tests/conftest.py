import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nefcalc.generate import random_polytope
from nefcalc.polytope import hull

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def polytopes(d: int, max_vertices: int = 7):
    """Full-dimensional random rational polytopes, shrinkable through the seed."""
    return st.integers(0, 2**32).map(lambda seed: random_polytope(random.Random(seed), d, max_vertices))


def rationals(lo=-5, hi=5, max_den=4):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den), st.integers(1, max_den))


def positive_rationals(max_num=12, max_den=4):
    return st.builds(Fraction, st.integers(1, max_num), st.integers(1, max_den))


@pytest.fixture
def square():
    return hull([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def big_square():
    return hull([(0, 0), (2, 0), (0, 2), (2, 2)])


@pytest.fixture
def triangle():
    return hull([(0, 0), (1, 0), (0, 1)])
