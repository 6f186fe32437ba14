from pathlib import Path

import hypothesis
import hypothesis.strategies as st
import pytest

from gameprov.graph import build_graph
from gameprov.solver import solve

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

FIG1_MOVES = [
    ("a", "b"), ("a", "o"), ("c", "d"), ("c", "e"), ("d", "e"), ("d", "f"),
    ("d", "g"), ("d", "h"), ("e", "h"), ("g", "d"), ("h", "i"), ("i", "j"),
]


@pytest.fixture
def fig1():
    return build_graph("abcdefghijo", FIG1_MOVES)


@pytest.fixture
def solved_fig1(fig1):
    return solve(fig1)[0]


@st.composite
def game_graphs(draw, max_nodes=10):
    n = draw(st.integers(0, max_nodes))
    names = [f"v{i}" for i in range(n)]
    if not names:
        return build_graph([], [])
    moves = draw(st.lists(st.tuples(st.sampled_from(names), st.sampled_from(names)), max_size=3 * n))
    return build_graph(names, moves)


# Acceptance lines collected by test_acceptance.py.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
