import random
import time

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from tokengraphs.graph import make_graph

# single CPU runners are slow enough to trip per-example deadlines
settings.register_profile("tokengraphs", deadline=None)
settings.load_profile("tokengraphs")

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title, seconds = marker.args
    _criteria[number] = (title, report.outcome, report.duration, seconds)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome, duration, seconds = _criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        timing = f"{duration:.1f}s / target {seconds}s"
        if outcome == "passed" and duration > seconds:
            timing += " (over time target)"
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {title}  [{timing}]")


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return make_graph(g.number_of_nodes(), g.edges())


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def timer():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
