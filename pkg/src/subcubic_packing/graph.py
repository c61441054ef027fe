"""Loopless multigraphs with positional edge identity.

Edges are addressed by their index in insertion order, so two parallel
edges between the same pair of vertices are distinct objects that can
receive different colors.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

INF = math.inf


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normalized = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            normalized.append((u, v))
        incidence: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(normalized):
            incidence[u].append(i)
            incidence[v].append(i)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_incidence", tuple(tuple(row) for row in incidence))

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incidence[v]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` with multiplicity, one entry per incident edge."""
        return [self.other_end(e, v) for e in self.incident_edges(v)]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def is_simple(self) -> bool:
        return len({frozenset(e) for e in self.edges}) == len(self.edges)

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``; edge order kept."""
        return MultiGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def subgraph(self, vertices: Iterable[int]) -> tuple["MultiGraph", list[int], list[int]]:
        """Induced subgraph on ``vertices``.

        Returns the subgraph, the old vertex id of each new vertex and the old
        edge id of each new edge.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edge_map = [i for i, (u, v) in enumerate(self.edges) if u in index and v in index]
        sub = MultiGraph(len(keep), [(index[self.edges[i][0]], index[self.edges[i][1]]) for i in edge_map])
        return sub, keep, edge_map

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise GraphError(f"edge id {e} out of range [0, {len(self.edges)})")


def degree(g: MultiGraph, v: int) -> int:
    return len(g.incident_edges(v))


def degrees(g: MultiGraph) -> list[int]:
    return [len(row) for row in g._incidence]


def is_subcubic(g: MultiGraph) -> bool:
    return all(d <= 3 for d in degrees(g))


def _line_neighbors(g: MultiGraph, e: int) -> set[int]:
    u, v = g.edges[e]
    out = set(g._incidence[u]) | set(g._incidence[v])
    out.discard(e)
    return out


def edge_distance(g: MultiGraph, e1: int, e2: int, cap: int | None = None) -> float:
    """Distance between two edges in the line graph.

    Returns ``INF`` when the edges are disconnected or further apart than
    ``cap`` (when given).
    """
    g._check_edge(e1)
    g._check_edge(e2)
    if e1 == e2:
        return 0
    dist = {e1: 0}
    queue = deque([e1])
    while queue:
        e = queue.popleft()
        d = dist[e]
        if cap is not None and d >= cap:
            continue
        for f in _line_neighbors(g, e):
            if f not in dist:
                if f == e2:
                    return d + 1
                dist[f] = d + 1
                queue.append(f)
    return INF


def edge_distances_from(g: MultiGraph, e: int, cap: int) -> dict[int, int]:
    """BFS distances from edge ``e`` to every edge within ``cap`` steps (``e`` itself excluded)."""
    dist = {e: 0}
    frontier = [e]
    for d in range(1, cap + 1):
        nxt = []
        for x in frontier:
            for f in _line_neighbors(g, x):
                if f not in dist:
                    dist[f] = d
                    nxt.append(f)
        frontier = nxt
    del dist[e]
    return dist


def sees(g: MultiGraph, e1: int, e2: int) -> bool:
    if e1 == e2:
        raise GraphError("sees is defined for distinct edges only")
    return edge_distance(g, e1, e2, cap=2) <= 2


def sees_adjacency(g: MultiGraph) -> list[frozenset[int]]:
    return [frozenset(edge_distances_from(g, e, 2)) for e in range(g.m)]


def maximum_matching(g: MultiGraph) -> set[int]:
    """Maximum-cardinality matching as a set of edge ids.

    Parallel edges collapse to their lowest id before running Edmonds'
    blossom algorithm; the choice among parallels never changes the size.
    """
    first_id: dict[frozenset[int], int] = {}
    for i, (u, v) in enumerate(g.edges):
        first_id.setdefault(frozenset((u, v)), i)
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    simple.add_edges_from(tuple(pair) for pair in first_id)
    matched = nx.max_weight_matching(simple, maxcardinality=True)
    return {first_id[frozenset(pair)] for pair in matched}


def connected(g: MultiGraph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def girth(g: MultiGraph) -> float:
    pairs: set[frozenset[int]] = set()
    for u, v in g.edges:
        key = frozenset((u, v))
        if key in pairs:
            return 2
        pairs.add(key)
    best = INF
    # BFS from each root; a non-tree edge closing at depth d gives a cycle of
    # length at most 2d+1, exact when minimised over all roots.
    for root in range(g.n):
        dist = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for e in g._incidence[v]:
                if e == parent_edge[v]:
                    continue
                w = g.other_end(e, v)
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent_edge[w] = e
                    queue.append(w)
                else:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


# -- canonical form -----------------------------------------------------------

def _refine(adj: list[list[int]], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until equitable.

    Cell order is derived from label-independent signatures only, so the
    procedure commutes with vertex relabeling.
    """
    n = len(adj)
    cell_of = [0] * n
    while True:
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cell_of[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _encode(adj_sets: list[set[int]], order: list[int]) -> bytes:
    n = len(order)
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    bits = bytearray()
    for j in range(n):
        vj = order[j]
        row = 0
        for i in range(j):
            row = (row << 1) | (order[i] in adj_sets[vj])
        bits += row.to_bytes((j + 7) // 8 or 1, "big")
    return bytes([n]) + bytes(bits)


def canonical_labeling(g: MultiGraph) -> tuple[list[int], bytes]:
    """Canonical vertex order of a simple graph and its adjacency encoding.

    Individualization-refinement: every leaf of the search tree is a
    discrete equitable partition, and the canonical leaf is the one with the
    smallest adjacency encoding.  Only twin vertices are pruned (swapping
    twins is an automorphism), which keeps n <= 10 cheap.
    """
    if not g.is_simple():
        raise GraphError("canonical forms are defined for simple graphs only")
    n = g.n
    if n == 0:
        return [], bytes([0])
    adj = [g.neighbors(v) for v in range(n)]
    adj_sets = [set(row) for row in adj]
    twin_key = [(frozenset(adj[v]), frozenset(adj[v]) | {v}) for v in range(n)]
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(adj[v]), []).append(v)
    start = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best: bytes | None = None
    best_order: list[int] = []
    stack = [start]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _encode(adj_sets, order)
            if best is None or code < best:
                best, best_order = code, order
            continue
        cell = cells[target]
        open_seen: set[frozenset[int]] = set()
        closed_seen: set[frozenset[int]] = set()
        for v in cell:
            open_key, closed_key = twin_key[v]
            if open_key in open_seen or closed_key in closed_seen:
                continue
            open_seen.add(open_key)
            closed_seen.add(closed_key)
            rest = [w for w in cell if w != v]
            stack.append(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))
    assert best is not None
    return best_order, best


def canonical_form(g: MultiGraph) -> bytes:
    """Byte string equal for two simple graphs exactly when they are isomorphic."""
    return canonical_labeling(g)[1]


def canonical_graph(g: MultiGraph) -> MultiGraph:
    """The canonical representative of ``g``'s isomorphism class, edges sorted."""
    order, _ = canonical_labeling(g)
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return MultiGraph(g.n, sorted(tuple(sorted((position[u], position[v]))) for u, v in g.edges))
