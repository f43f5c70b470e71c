import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def compositions(draw, min_size=0, max_size=4):
    n = draw(st.integers(min_size, max_size))
    parts = []
    while n:
        a = draw(st.integers(1, n))
        parts.append(a)
        n -= a
    return tuple(parts)


@st.composite
def partitions(draw, min_size=0, max_size=4):
    return tuple(sorted(draw(compositions(min_size, max_size)), reverse=True))


@st.composite
def permutations(draw, min_size=0, max_size=4):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
