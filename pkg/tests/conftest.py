import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from subcubic_packing.graph import MultiGraph
from subcubic_packing.lemmas import figure1_graph, petersen_graph

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance_log():
    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")


@pytest.fixture
def fig1():
    return figure1_graph()


@pytest.fixture
def petersen():
    return petersen_graph()


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def to_nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def line_graph_nx(g: MultiGraph) -> nx.Graph:
    """Line graph built straight from the definition (shared endpoint)."""
    lg = nx.Graph()
    lg.add_nodes_from(range(g.m))
    for a, b in itertools.combinations(range(g.m), 2):
        if set(g.edges[a]) & set(g.edges[b]):
            lg.add_edge(a, b)
    return lg


@st.composite
def multigraphs(draw, max_n=6, max_m=10, min_m=0):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, min_size=min_m, max_size=max_m))
    return MultiGraph(n, edges)


def labeled_iso_classes(n, connected_only=True):
    """Isomorphism classes of labeled graphs with max degree 3, bucketed by WL hash."""
    pairs = list(itertools.combinations(range(n), 2))
    buckets: dict[str, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if any(d > 3 for _, d in h.degree()):
            continue
        if connected_only and not nx.is_connected(h):
            continue
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]
