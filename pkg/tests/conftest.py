import numpy as np
import pytest

from dslq.graph import Graph, random_graph

_CRITERIA: dict[str, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or report.when != "call" and not report.failed:
        return
    number, title = mark.args
    ok = report.passed and report.when == "call"
    prev = _CRITERIA.get(number)
    _CRITERIA[number] = (title, ok and (prev is None or prev[1]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA, key=int):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_connected_graphs(count, n_range, seed, p_range=(0.05, 0.7)):
    """Deterministic stream of connected graphs with varied density."""
    gen = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(gen.integers(n_range[0], n_range[1] + 1))
        p = float(gen.uniform(*p_range))
        out.append(random_graph(n, p, gen, connected=True))
    return out


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
