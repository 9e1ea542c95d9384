import math
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from wtgraph import WeightVector

SQRT2 = math.sqrt(2)
SIX_NODE_WEIGHTS = (1, 0, -SQRT2, 0, 2)


def rational(rng: random.Random, span: int = 20, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_rational_weights(rng: random.Random, n: int) -> WeightVector:
    return WeightVector(tuple(rational(rng) for _ in range(n - 1)))


def random_float_weights(rng: random.Random, n: int, lo=-5.0, hi=5.0) -> WeightVector:
    return WeightVector(tuple(rng.uniform(lo, hi) for _ in range(n - 1)))


small_fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)
small_floats = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def exact_weights(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return WeightVector(tuple(draw(st.lists(small_fractions, min_size=n - 1, max_size=n - 1))))


@st.composite
def float_weights(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return WeightVector(tuple(draw(st.lists(small_floats, min_size=n - 1, max_size=n - 1))), exact=False)


@pytest.fixture
def rng():
    return random.Random(20261015)


# -- acceptance reporting ----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    ok = report.passed if report.when == "call" else False
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}")
