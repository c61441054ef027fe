"""Graph corpora: isomorph-free small subcubic graphs and seeded random multigraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import MultiGraph, canonical_graph, canonical_labeling, connected

MAX_ENUMERATION_N = 10


@dataclass(frozen=True)
class EnumerationSpec:
    max_n: int
    connected_only: bool = True
    max_degree: int = 3

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.max_n > MAX_ENUMERATION_N:
            raise ValueError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")


def enumerate_subcubic(spec: EnumerationSpec) -> Iterator[MultiGraph]:
    """One graph per isomorphism class on exactly ``spec.max_n`` vertices.

    Graphs are grown one edge at a time from the empty graph; each level is
    deduplicated by canonical form before the next edge is added.  Output is
    in canonical labeling, ordered by edge count and then canonical code.
    """
    n = spec.max_n
    level: dict[bytes, MultiGraph] = {canonical_labeling(MultiGraph(n))[1]: MultiGraph(n)}
    while level:
        for code in sorted(level):
            g = level[code]
            if not spec.connected_only or connected(g):
                yield g
        nxt: dict[bytes, MultiGraph] = {}
        for g in level.values():
            deg = [0] * n
            present = set()
            for u, v in g.edges:
                deg[u] += 1
                deg[v] += 1
                present.add((u, v))
            open_vertices = [v for v in range(n) if deg[v] < spec.max_degree]
            for i, u in enumerate(open_vertices):
                for v in open_vertices[i + 1:]:
                    if (u, v) in present:
                        continue
                    h = MultiGraph(n, g.edges + ((u, v),))
                    code = canonical_labeling(h)[1]
                    if code not in nxt:
                        nxt[code] = canonical_graph(h)
        level = nxt


def count_subcubic(spec: EnumerationSpec) -> int:
    return sum(1 for _ in enumerate_subcubic(spec))


def random_subcubic_multigraph(n: int, parallel_prob: float, seed: int) -> MultiGraph:
    """Connected loopless multigraph with maximum degree 3, reproducible per seed.

    A random spanning tree with degrees <= 3 guarantees connectivity; extra
    edges are then drawn between vertices with spare degree.  A drawn pair
    that is already adjacent becomes a parallel edge with probability
    ``parallel_prob``.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not 0.0 <= parallel_prob <= 1.0:
        raise ValueError("parallel_prob must lie in [0, 1]")
    rng = random.Random(seed)
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        candidates = [u for u in order[:i] if deg[u] < 3]
        u, v = rng.choice(candidates), order[i]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1

    # bias towards near-cubic graphs, the hard end of the family
    most = (n + 2) // 2
    target = rng.randint(max(1, most // 2), most)
    added = 0
    for _ in range(20 * n):
        if added >= target:
            break
        spare = [v for v in range(n) if deg[v] < 3]
        if len(spare) < 2:
            break
        u, v = rng.sample(spare, 2)
        if any({u, v} == {a, b} for a, b in edges) and rng.random() >= parallel_prob:
            continue
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
        added += 1
    g = MultiGraph(n, edges)
    assert connected(g)
    return g
