import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hyperlap import hypergraph  # noqa: E402
from hyperlap import catalog  # noqa: E402


@st.composite
def hypergraphs(draw, max_vertices=7, max_hyperedges=6, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    m = draw(st.integers(0, max_hyperedges))
    V = [f"v{i}" for i in range(1, n + 1)]
    side = st.lists(st.sampled_from(V), min_size=1, max_size=n, unique=True)
    edges = [(f"h{j}", draw(side), draw(side)) for j in range(1, m + 1)]
    return hypergraph(V, edges)


@pytest.fixture
def two_reactions():
    return catalog.two_reactions()


@pytest.fixture
def branching():
    return catalog.branching_reunion()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
