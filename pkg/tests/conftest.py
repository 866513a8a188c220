from fractions import Fraction

import pytest
from hypothesis import strategies as st

from semisched import build_instance

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


positive_fractions = st.fractions(min_value=Fraction(1, 12), max_value=50, max_denominator=12)


@st.composite
def size_lists(draw, min_n=1, max_n=8, integers=False):
    if integers:
        elems = st.integers(min_value=1, max_value=30).map(Fraction)
    else:
        elems = positive_fractions
    sizes = draw(st.lists(elems, min_size=min_n, max_size=max_n))
    return sorted(sizes, reverse=True)


@st.composite
def instances(draw, machines=(2, 3), min_n=1, max_n=8, integers=False):
    m = draw(st.sampled_from(machines))
    return build_instance(m, draw(size_lists(min_n=min_n, max_n=max_n, integers=integers)))
