from __future__ import annotations

import sys

import hypothesis.strategies as st
import pytest

from jaco.graph import SimpleGraph, make_graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> SimpleGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = set(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else set()
    if connected and n > 1:
        order = draw(st.permutations(range(1, n + 1)))
        for k in range(1, n):
            parent = order[draw(st.integers(0, k - 1))]
            u, v = sorted((parent, order[k]))
            edges.add((u, v))
    return make_graph(n, edges)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text("5\n1 2\n2 3\n3 4\n4 5\n")
    return path
