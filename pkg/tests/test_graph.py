import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import line_graph_nx, multigraphs, path_graph, to_nx
from subcubic_packing.graph import (
    INF,
    GraphError,
    MultiGraph,
    canonical_form,
    connected,
    degree,
    edge_distance,
    girth,
    is_subcubic,
    maximum_matching,
    sees,
    sees_adjacency,
)
from subcubic_packing.packing import is_matching


def brute_max_matching(g):
    for size in range(g.m, 0, -1):
        for subset in itertools.combinations(range(g.m), size):
            if is_matching(g, subset):
                return size
    return 0


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            MultiGraph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            MultiGraph(2, [(0, 2)])

    def test_edge_ids_are_positional(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (0, 1)])
        assert g.edges[2] == (0, 1)
        assert g.incident_edges(0) == (0, 2)
        assert not g.is_simple()


def test_is_subcubic():
    assert is_subcubic(MultiGraph(2, [(0, 1)] * 3))
    assert not is_subcubic(MultiGraph(5, [(0, i) for i in range(1, 5)]))


def test_figure1_shape(fig1):
    assert is_subcubic(fig1)
    assert connected(fig1)
    assert (fig1.n, fig1.m) == (7, 10)
    assert degree(fig1, 1) == 2  # x2
    assert [degree(fig1, v) for v in range(7) if v != 1] == [3] * 6


def test_degree():
    assert degree(MultiGraph(2, [(0, 1), (0, 1)]), 0) == 2
    assert degree(MultiGraph(3, [(0, 1)]), 2) == 0
    with pytest.raises(GraphError):
        degree(MultiGraph(2), 5)


def test_edge_distance_examples():
    p = path_graph(4)  # edges ab=0, bc=1, cd=2
    assert edge_distance(p, 0, 1) == 1
    assert edge_distance(p, 0, 2) == 2
    assert edge_distance(p, 0, 0) == 0
    par = MultiGraph(2, [(0, 1), (0, 1)])
    assert edge_distance(par, 0, 1) == 1
    assert edge_distance(MultiGraph(4, [(0, 1), (2, 3)]), 0, 1) == INF
    assert edge_distance(path_graph(6), 0, 4, cap=2) == INF
    with pytest.raises(GraphError):
        edge_distance(p, 0, 7)


def test_sees_examples(fig1):
    p4 = path_graph(4)
    assert sees(p4, 0, 2)
    p5 = path_graph(5)
    assert not sees(p5, 0, 3)
    with pytest.raises(GraphError):
        sees(p4, 1, 1)


def test_figure1_every_pair_of_edges_sees(fig1):
    # maximum induced matching of size one means no two edges are at distance >= 3
    for a, b in itertools.combinations(range(fig1.m), 2):
        assert sees(fig1, a, b)


def test_sees_adjacency_examples(petersen):
    assert sees_adjacency(MultiGraph(2, [(0, 1)])) == [frozenset()]
    tri = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert all(len(row) == 2 for row in sees_adjacency(tri))
    rows = sees_adjacency(petersen)
    # direct count: f is seen when it touches e or touches an edge touching e
    for e in range(petersen.m):
        ends = set(petersen.edges[e])
        touching = {f for f in range(petersen.m) if f != e and ends & set(petersen.edges[f])}
        second = {f for f in range(petersen.m) if f != e
                  and any(set(petersen.edges[f]) & set(petersen.edges[t]) for t in touching)}
        assert rows[e] == touching | second
        assert len(rows[e]) == 12  # 4 touching + 8 at distance two


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=7, max_m=12))
def test_edge_distance_matches_line_graph_bfs(g):
    lg = line_graph_nx(g)
    lengths = dict(nx.all_pairs_shortest_path_length(lg))
    for a in range(g.m):
        for b in range(g.m):
            expected = lengths[a].get(b, math.inf)
            assert edge_distance(g, a, b) == expected
            if a != b:
                assert sees(g, a, b) == (expected <= 2)
                assert sees(g, a, b) == sees(g, b, a)


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=7, max_m=12))
def test_edge_distance_triangle_inequality(g):
    for a, b, c in itertools.product(range(g.m), repeat=3):
        assert edge_distance(g, a, c) <= edge_distance(g, a, b) + edge_distance(g, b, c)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=8, max_m=12))
def test_sees_adjacency_symmetric_irreflexive(g):
    rows = sees_adjacency(g)
    for e, row in enumerate(rows):
        assert e not in row
        for f in row:
            assert e in rows[f]


def test_maximum_matching_examples(fig1, petersen):
    assert len(maximum_matching(path_graph(4))) == 2
    assert len(maximum_matching(fig1)) == 3
    assert len(maximum_matching(petersen)) == 5
    assert brute_max_matching(petersen) == 5


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=8, max_m=12))
def test_maximum_matching_is_maximum(g):
    matching = maximum_matching(g)
    assert is_matching(g, sorted(matching))
    assert len(matching) == brute_max_matching(g)


def test_connected():
    assert not connected(MultiGraph(4, [(0, 1), (2, 3)]))
    assert connected(MultiGraph(0))
    assert connected(MultiGraph(1))


def test_girth(petersen):
    assert girth(path_graph(5)) == INF
    assert girth(MultiGraph(2, [(0, 1), (0, 1)])) == 2
    assert girth(petersen) == 5
    assert girth(MultiGraph(3, [(0, 1), (1, 2), (2, 0)])) == 3


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=8, max_m=12))
def test_girth_matches_networkx_on_simple_graphs(g):
    if not g.is_simple():
        assert girth(g) == 2
        return
    assert girth(g) == nx.girth(to_nx(g))


class TestCanonicalForm:
    def test_relabelled_paths(self):
        assert canonical_form(MultiGraph(3, [(0, 1), (1, 2)])) == canonical_form(MultiGraph(3, [(2, 1), (1, 0)]))

    def test_k3_vs_p3(self):
        assert canonical_form(MultiGraph(3, [(0, 1), (1, 2), (0, 2)])) != canonical_form(MultiGraph(3, [(0, 1), (1, 2)]))

    def test_all_relabelings_of_k3(self):
        k3 = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
        forms = {canonical_form(k3.relabel(p)) for p in itertools.permutations(range(3))}
        assert len(forms) == 1

    def test_rejects_multigraph(self):
        with pytest.raises(GraphError):
            canonical_form(MultiGraph(2, [(0, 1), (0, 1)]))

    def test_random_permutation_invariance_and_degree_separation(self):
        rng = random.Random(7)
        graphs = []
        for _ in range(500):
            n = rng.randint(1, 8)
            p = rng.random()
            g = MultiGraph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))
            graphs.append(g)
        for g, h in zip(graphs, graphs[1:]):
            degs_g = sorted(len(g.incident_edges(v)) for v in range(g.n))
            degs_h = sorted(len(h.incident_edges(v)) for v in range(h.n))
            if degs_g != degs_h:
                assert canonical_form(g) != canonical_form(h)

    def test_equal_iff_isomorphic(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(1, 7)
            g, h = (MultiGraph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.45])
                    for _ in range(2))
            assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_large_automorphism_group_is_fast(self, petersen):
        assert canonical_form(MultiGraph(10)) == canonical_form(MultiGraph(10))
        cube_like = MultiGraph(10, [(2 * i, 2 * i + 1) for i in range(5)])
        assert canonical_form(cube_like) == canonical_form(cube_like.relabel(list(range(9, -1, -1))))
        assert canonical_form(petersen) == canonical_form(petersen.relabel([3, 7, 1, 0, 9, 2, 8, 4, 6, 5]))
