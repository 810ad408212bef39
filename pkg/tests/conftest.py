import pytest
from hypothesis import strategies as st

from qstirling.words import Multiset

ACCEPTANCE_LINES: list[str] = []


@st.composite
def multisets(draw, max_K=7, max_n=5):
    n = draw(st.integers(1, max_n))
    ks = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n).filter(lambda ks: sum(ks) <= max_K))
    return Multiset(tuple(ks))


@st.composite
def words_of(draw, max_K=8, max_n=5):
    m = draw(multisets(max_K=max_K, max_n=max_n))
    return tuple(draw(st.permutations(list(m.elements()))))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def m22():
    return Multiset.of(2, 2)
