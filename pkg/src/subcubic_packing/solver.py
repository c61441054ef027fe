"""Exact search for packing edge-colorings.

The search colors one edge per level, always the uncolored edge with the
fewest admissible classes.  Admissible classes are kept as bitmasks and
updated by forward checking.  Classes with equal distance parameter are
interchangeable, so only the lowest unused one of each group is tried.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .graph import MultiGraph, degrees, edge_distance, edge_distances_from, maximum_matching
from .packing import (
    UNCOLORED,
    Coloring,
    InconsistentColoring,
    PackingSpec,
    parse_spec,
    verify,
)
from .sdr import has_sdr

GOOD_SPEC = parse_spec("1,2^7")


class Status(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SolveOptions:
    node_limit: int = 0
    time_limit_ms: int = 0
    symmetry_breaking: bool = True
    hall_pruning: bool = True
    seed_heuristic: bool = False


@dataclass
class SolveStats:
    nodes: int = 0
    max_depth: int = 0
    wall_ms: float = 0.0
    seeded: bool = False

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "max_depth": self.max_depth,
                "wall_ms": round(self.wall_ms, 3), "seeded": self.seeded}


@dataclass
class SolveResult:
    status: Status
    coloring: Optional[list[int]] = None
    stats: SolveStats = field(default_factory=SolveStats)

    def to_dict(self) -> dict:
        return {"status": self.status.value, "coloring": self.coloring, "stats": self.stats.to_dict()}


class _LimitReached(Exception):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Search:
    def __init__(self, g: MultiGraph, spec: PackingSpec, good: bool, opts: SolveOptions,
                 partial: Coloring):
        self.g = g
        self.spec = spec
        self.opts = opts
        m, k = g.m, spec.k
        self.m, self.k = m, k

        reach = max(spec.s)
        dist = [edge_distances_from(g, e, reach) for e in range(m)]
        by_s = {}
        for s in set(spec.s):
            by_s[s] = [sum(1 << f for f, d in dist[e].items() if d <= s) for e in range(m)]
        # conflict[c][e]: edges that may not share class c with e
        self.conflict = [by_s[s] for s in spec.s]

        deg = degrees(g)
        full = (1 << k) - 1
        one_mask = sum(1 << c for c in spec.one_classes())
        self.avail = []
        for u, v in g.edges:
            mask = full
            if good and (deg[u] != 3 or deg[v] != 3):
                mask &= ~one_mask
            self.avail.append(mask)

        self.color: list[Optional[int]] = list(partial)
        self.used = [0] * k
        self.uncolored = 0
        for e, c in enumerate(self.color):
            if c is UNCOLORED:
                self.uncolored |= 1 << e
        for e, c in enumerate(self.color):
            if c is not UNCOLORED:
                self.used[c] += 1
                for f in _bits(self.conflict[c][e] & self.uncolored):
                    self.avail[f] &= ~(1 << c)

        # classes grouped by equal distance parameter, in index order
        self.groups: list[list[int]] = [list(grp) for _, grp in itertools.groupby(range(k), key=lambda c: spec.s[c])]
        self.one_mask = one_mask
        self._build_cliques(g)

        self.stats = SolveStats()
        self.deadline = None
        if opts.time_limit_ms:
            self.deadline = time.perf_counter() + opts.time_limit_ms / 1000.0

    def _build_cliques(self, g: MultiGraph) -> None:
        """Edge sets that pairwise conflict: vertex bundles and edge stars.

        In a vertex bundle every class fits at most once.  In the star of an
        edge uv (all edges touching u or v) a 1-class can still hold two
        edges, one at each end, so 1-classes get capacity 2 there.
        """
        cliques: list[tuple[int, bool]] = []
        seen = set()
        for v in range(g.n):
            mask = sum(1 << e for e in g.incident_edges(v))
            if mask.bit_count() >= 2 and (mask, False) not in seen:
                seen.add((mask, False))
                cliques.append((mask, False))
        if any(s >= 2 for s in self.spec.s):
            for u, v in g.edges:
                mask = sum(1 << e for e in set(g.incident_edges(u)) | set(g.incident_edges(v)))
                if mask.bit_count() >= 3 and (mask, True) not in seen:
                    seen.add((mask, True))
                    cliques.append((mask, True))
        self.cliques = cliques
        self.cliques_of = [[] for _ in range(self.m)]
        for qi, (mask, _) in enumerate(cliques):
            for e in _bits(mask):
                self.cliques_of[e].append(qi)

    def _hall_ok(self, touched: list[int]) -> bool:
        checked = set()
        for e in touched:
            for qi in self.cliques_of[e]:
                if qi in checked:
                    continue
                checked.add(qi)
                mask, is_star = self.cliques[qi]
                members = list(_bits(mask & self.uncolored))
                size = len(members)
                if size < 2:
                    continue
                sets = [self.avail[f] for f in members]
                if min(x.bit_count() for x in sets) >= size:
                    continue
                family = []
                for x in sets:
                    elems = []
                    for c in _bits(x):
                        if is_star and (self.one_mask >> c) & 1:
                            elems.append((c, 0))
                            elems.append((c, 1))
                        else:
                            elems.append((c, 0))
                    family.append(elems)
                if not has_sdr(family):
                    return False
        return True

    def _symmetry_mask(self) -> int:
        if not self.opts.symmetry_breaking:
            return (1 << self.k) - 1
        mask = 0
        for grp in self.groups:
            fresh = True
            for c in grp:
                if self.used[c]:
                    mask |= 1 << c
                elif fresh:
                    mask |= 1 << c
                    fresh = False
        return mask

    def run(self) -> Status:
        start = time.perf_counter()
        try:
            found = self._search(0)
            status = Status.SAT if found else Status.UNSAT
        except _LimitReached:
            status = Status.INCONCLUSIVE
        self.stats.wall_ms = (time.perf_counter() - start) * 1000.0
        return status

    def _search(self, depth: int) -> bool:
        stats = self.stats
        stats.nodes += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        if self.opts.node_limit and stats.nodes > self.opts.node_limit:
            raise _LimitReached
        if self.deadline is not None and stats.nodes % 128 == 0 and time.perf_counter() > self.deadline:
            raise _LimitReached
        if not self.uncolored:
            return True

        sym = self._symmetry_mask()
        avail = self.avail
        best, best_count = -1, self.k + 1
        for e in _bits(self.uncolored):
            cnt = (avail[e] & sym).bit_count()
            if cnt < best_count:
                best, best_count = e, cnt
                if cnt <= 1:
                    break
        if best_count == 0:
            return False

        e = best
        ebit = 1 << e
        self.uncolored ^= ebit
        for c in _bits(avail[e] & sym):
            cbit = 1 << c
            changed = []
            dead = False
            for f in _bits(self.conflict[c][e] & self.uncolored):
                if avail[f] & cbit:
                    avail[f] ^= cbit
                    changed.append(f)
                    if not avail[f]:
                        dead = True
            if not dead and self.opts.hall_pruning and changed:
                dead = not self._hall_ok(changed)
            if not dead:
                self.color[e] = c
                self.used[c] += 1
                if self._search(depth + 1):
                    return True
                self.used[c] -= 1
                self.color[e] = UNCOLORED
            for f in changed:
                avail[f] |= cbit
        self.uncolored |= ebit
        return False


def _check_partial(g: MultiGraph, spec: PackingSpec, partial: Coloring, good: bool) -> None:
    if len(partial) != g.m:
        raise ValueError(f"partial coloring has {len(partial)} entries for {g.m} edges")
    problems = verify(g, spec, partial, good)
    if problems:
        raise InconsistentColoring(problems)


def _finish(g, spec, good, search: _Search, status: Status) -> SolveResult:
    if status is Status.SAT:
        coloring = list(search.color)
        problems = verify(g, spec, coloring, good)
        if problems or any(c is UNCOLORED for c in coloring):
            raise RuntimeError(f"solver produced an invalid coloring: {problems}")
        return SolveResult(status, coloring, search.stats)
    return SolveResult(status, None, search.stats)


def extend(g: MultiGraph, spec: PackingSpec, partial: Coloring, good: bool = False,
           opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Complete ``partial`` to a full coloring, keeping every assigned class."""
    _check_partial(g, spec, partial, good)
    search = _Search(g, spec, good, opts, partial)
    return _finish(g, spec, good, search, search.run())


def _matching_seed(g: MultiGraph, spec: PackingSpec, good: bool) -> list[Optional[int]]:
    one = spec.one_classes()
    seed: list[Optional[int]] = [UNCOLORED] * g.m
    if not one:
        return seed
    deg = degrees(g)
    for e in maximum_matching(g):
        u, v = g.edges[e]
        if not good or (deg[u] == 3 and deg[v] == 3):
            seed[e] = one[0]
    return seed


def _remaining(opts: SolveOptions, used_nodes: int, started: float) -> SolveOptions:
    node_limit = opts.node_limit
    if node_limit:
        node_limit = max(1, node_limit - used_nodes)
    time_limit = opts.time_limit_ms
    if time_limit:
        elapsed = int((time.perf_counter() - started) * 1000)
        time_limit = max(1, time_limit - elapsed)
    return replace(opts, node_limit=node_limit, time_limit_ms=time_limit, seed_heuristic=False)


def solve(g: MultiGraph, spec: PackingSpec, good: bool = False,
          opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Decide whether ``g`` has a ``spec``-packing edge-coloring and find one.

    With ``opts.seed_heuristic`` a maximum matching is first put into the
    lowest 1-class and completed; if that completion fails the cold search
    runs with whatever budget is left.
    """
    if opts.seed_heuristic and spec.one_classes():
        return _seeded_solve(g, spec, good, opts)
    return extend(g, spec, [UNCOLORED] * g.m, good, opts)


def _seeded_solve(g: MultiGraph, spec: PackingSpec, good: bool, opts: SolveOptions) -> SolveResult:
    started = time.perf_counter()
    seed = _matching_seed(g, spec, good)
    first = extend(g, spec, seed, good, replace(opts, seed_heuristic=False))
    first.stats.seeded = True
    if first.status is Status.SAT:
        return first
    if first.status is Status.INCONCLUSIVE and (opts.node_limit or opts.time_limit_ms):
        remaining = _remaining(opts, first.stats.nodes, started)
    else:
        remaining = replace(opts, seed_heuristic=False)
    cold = extend(g, spec, [UNCOLORED] * g.m, good, remaining)
    cold.stats.nodes += first.stats.nodes
    cold.stats.wall_ms = (time.perf_counter() - started) * 1000.0
    return cold


def matching_first_heuristic(g: MultiGraph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Good (1,2^7) coloring seeded by a maximum matching in the 1-class."""
    return solve(g, GOOD_SPEC, True, replace(opts, seed_heuristic=True))


ORACLE_MAX_EDGES = 10
ORACLE_MAX_CLASSES = 8


def brute_force_oracle(g: MultiGraph, spec: PackingSpec, good: bool = False) -> Status:
    """Exact decision by plain enumeration of class assignments.

    Edges are assigned in index order and a prefix is abandoned as soon as
    it contains a violating pair; the full assignment is re-checked with
    :func:`verify`.  No ordering heuristics, symmetry breaking or pruning
    beyond that, so it stays independent of :func:`solve`.
    """
    if g.m > ORACLE_MAX_EDGES or spec.k > ORACLE_MAX_CLASSES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_EDGES} edges and {ORACLE_MAX_CLASSES} classes")
    m, k = g.m, spec.k
    deg = degrees(g)
    dist = [[edge_distance(g, a, b) for b in range(m)] for a in range(m)]
    allowed = []
    for u, v in g.edges:
        bad_end = good and (deg[u] != 3 or deg[v] != 3)
        allowed.append([c for c in range(k) if not (bad_end and spec.s[c] == 1)])
    assignment = [0] * m

    def place(i: int) -> bool:
        if i == m:
            return not verify(g, spec, assignment, good)
        for c in allowed[i]:
            if all(assignment[j] != c or dist[i][j] > spec.s[c] for j in range(i)):
                assignment[i] = c
                if place(i + 1):
                    return True
        return False

    return Status.SAT if place(0) else Status.UNSAT
