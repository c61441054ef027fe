"""Reproducible checks of the computer-verified and sharpness claims.

Each check returns a :class:`LemmaReport`.  Pattern sweeps work on abstract
color sets: the seven 2-classes are the integers 0..6 and the 1-class is
:data:`ONE`.  In reports they are written ``"2_1"`` .. ``"2_7"`` and ``"1"``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .enumeration import EnumerationSpec, enumerate_subcubic
from .formats import emit_graph6, graph_reference
from .graph import MultiGraph, connected, degrees
from .packing import UNCOLORED, PackingSpec, is_induced_matching, is_matching, parse_spec, used_at_vertex
from .sdr import has_sdr
from .solver import GOOD_SPEC, SolveOptions, Status, extend, solve

TWO_CLASSES = tuple(range(7))
ONE = 7

Pattern = tuple[frozenset, ...]


@dataclass
class LemmaReport:
    lemma: str
    examined: int
    failures: list = field(default_factory=list)
    wall_ms: float = 0.0
    details: dict = field(default_factory=dict)
    passed: Optional[bool] = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = not self.failures

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "passed": self.passed,
            "examined": self.examined,
            "failures": self.failures,
            "wall_ms": round(self.wall_ms, 3),
            "details": self.details,
        }


def _label(c: int) -> str:
    return "1" if c == ONE else f"2_{c + 1}"


def _pattern_labels(p: Sequence[Iterable[int]]) -> list[list[str]]:
    return [sorted(_label(c) for c in s) for s in p]


# -- fixed graphs -------------------------------------------------------------

def figure1_graph() -> MultiGraph:
    """Seven vertices x1..x7 (ids 0..6), ten edges; x2 is the only 2-vertex."""
    x = {i: i - 1 for i in range(1, 8)}
    pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (3, 6), (5, 6), (6, 7), (4, 7), (1, 7)]
    return MultiGraph(7, [(x[a], x[b]) for a, b in pairs])


def petersen_graph() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return MultiGraph(10, outer + inner + spokes)


def maximum_induced_matching_size(g: MultiGraph) -> int:
    """Brute force over edge subsets, largest first."""
    for size in range(g.m, 0, -1):
        for subset in combinations(range(g.m), size):
            if is_induced_matching(g, subset):
                return size
    return 0


def _classes_of(coloring: Sequence[int], k: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(k)]
    for e, c in enumerate(coloring):
        out[c].append(e)
    return out


def _structure_ok(g: MultiGraph, spec: PackingSpec, coloring: Sequence[int]) -> bool:
    """Independent structural check: 1-classes are matchings, 2-classes induced matchings."""
    for c, members in enumerate(_classes_of(coloring, spec.k)):
        if spec.s[c] == 1 and not is_matching(g, members):
            return False
        if spec.s[c] == 2 and not is_induced_matching(g, members):
            return False
    return True


def sharpness_check(opts: SolveOptions = SolveOptions()) -> LemmaReport:
    start = time.perf_counter()
    g = figure1_graph()
    deg = degrees(g)
    legs = []
    failures = []
    for text, expected in (("1,2^6", Status.UNSAT), ("1,2^7", Status.SAT)):
        spec = parse_spec(text)
        result = solve(g, spec, True, opts)
        leg = {"spec": str(spec), "good": True, "expected": expected.value,
               "status": result.status.value, "nodes": result.stats.nodes}
        if result.coloring is not None:
            ones = [e for e, c in enumerate(result.coloring) if spec.s[c] == 1]
            leg["coloring"] = result.coloring
            leg["one_class_edges"] = ones
            leg["one_class_endpoints_cubic"] = all(deg[u] == 3 and deg[v] == 3 for e in ones for u, v in [g.edges[e]])
            leg["one_class_avoids_x2"] = all(1 not in g.edges[e] for e in ones)
            leg["structure_ok"] = _structure_ok(g, spec, result.coloring)
            if not (leg["one_class_endpoints_cubic"] and leg["one_class_avoids_x2"] and leg["structure_ok"]):
                failures.append({"spec": str(spec), "reason": "coloring breaks the good-coloring structure"})
        if result.status is not expected:
            failures.append({"spec": str(spec), "reason": f"expected {expected.value}, got {result.status.value}"})
        legs.append(leg)
    return LemmaReport("sharpness", len(legs), failures,
                       (time.perf_counter() - start) * 1000.0, {"legs": legs})


def petersen_check(opts: SolveOptions = SolveOptions()) -> LemmaReport:
    start = time.perf_counter()
    g = petersen_graph()
    spec = parse_spec("1,2^5")
    result = solve(g, spec, True, opts)
    details: dict = {"spec": str(spec), "good": True, "status": result.status.value,
                     "nodes": result.stats.nodes}
    failures = []
    if result.status is not Status.SAT:
        failures.append({"reason": f"expected SAT, got {result.status.value}"})
    else:
        classes = _classes_of(result.coloring, spec.k)
        details["coloring"] = result.coloring
        details["class_sizes"] = [len(c) for c in classes]
        details["structure_ok"] = _structure_ok(g, spec, result.coloring)
        if not details["structure_ok"]:
            failures.append({"reason": "class structure check failed"})
    return LemmaReport("petersen-(1,2^5)", 1, failures, (time.perf_counter() - start) * 1000.0, details)


# -- exhaustive small graphs ----------------------------------------------------

def lemma9_check(max_n: int = 9, spec: PackingSpec = GOOD_SPEC, good: bool = True,
                 opts: SolveOptions = SolveOptions()) -> LemmaReport:
    """Solve every connected simple subcubic graph on 1..max_n vertices.

    ``spec``/``good`` default to the good (1,2^7) target; passing a stricter
    spec is how the harness is shown to detect failures.
    """
    if not 1 <= max_n <= 9:
        raise ValueError("max_n must lie in 1..9")
    start = time.perf_counter()
    failures = []
    per_n = {}
    nodes = 0
    examined = 0
    for n in range(1, max_n + 1):
        count = 0
        for g in enumerate_subcubic(EnumerationSpec(n, connected_only=True)):
            count += 1
            result = solve(g, spec, good, opts)
            nodes += result.stats.nodes
            if result.status is not Status.SAT:
                failures.append({"n": n, "graph6": emit_graph6(g), "status": result.status.value})
        per_n[str(n)] = count
        examined += count
    details = {"spec": str(spec), "good": good, "graphs_per_n": per_n, "total_nodes": nodes}
    return LemmaReport("lemma9", examined, failures, (time.perf_counter() - start) * 1000.0, details)


# -- 3-edge cuts ------------------------------------------------------------------

def _signature_key(p: Sequence[frozenset], colors: Iterable[int]) -> tuple:
    """Pattern identity up to relabeling ``colors``: which positions hold each color."""
    sigs = []
    for c in colors:
        where = tuple(i for i, s in enumerate(p) if c in s)
        if where:
            sigs.append(where)
    return tuple(sorted(sigs))


def _representatives(patterns: Iterable[Pattern], colors: Sequence[int], fixed: Sequence[int] = ()) -> list[Pattern]:
    seen = {}
    for p in patterns:
        key = (_signature_key(p, colors), tuple(tuple(i for i, s in enumerate(p) if c in s) for c in fixed))
        if key not in seen:
            seen[key] = p
    return list(seen.values())


def cut3_extension_exists(px: Sequence[Iterable[int]], py: Sequence[Iterable[int]]) -> bool:
    """Is there a permutation of the 2-classes on the Y side clearing every cut edge?

    Cut edge ``i`` can take the 1-class exactly when its two endpoint sets are
    disjoint, so we need an injective image for each Y-side class avoiding
    the X-side sets at every position where it occurs.
    """
    px = [frozenset(s) for s in px]
    py = [frozenset(s) for s in py]
    ycolors = sorted(set().union(*py))
    family = [[t for t in TWO_CLASSES if all(t not in px[i] for i in range(len(py)) if c in py[i])]
              for c in ycolors]
    return has_sdr(family)


def cut3_exceptional(px: Sequence[Iterable[int]], py: Sequence[Iterable[int]]) -> bool:
    """One side has three identical sets and the other side's union has size 6."""
    px = [frozenset(s) for s in px]
    py = [frozenset(s) for s in py]

    def identical(p):
        return p[0] == p[1] == p[2]

    return (identical(px) and len(set().union(*py)) == 6) or (identical(py) and len(set().union(*px)) == 6)


def _two_class_pairs() -> list[frozenset]:
    return [frozenset(p) for p in combinations(TWO_CLASSES, 2)]


def cut3_pattern_check() -> LemmaReport:
    """Sweep X patterns (one per color-relabeling class) against every Y pattern."""
    start = time.perf_counter()
    pairs = _two_class_pairs()
    all_patterns = [tuple(p) for p in product(pairs, repeat=3)]
    x_reps = _representatives(all_patterns, TWO_CLASSES)
    failures = []
    mismatches = []
    examined = 0
    for px in x_reps:
        for py in all_patterns:
            examined += 1
            ok = cut3_extension_exists(px, py)
            if not ok:
                failures.append({"x": _pattern_labels(px), "y": _pattern_labels(py)})
            if ok == cut3_exceptional(px, py):
                mismatches.append({"x": _pattern_labels(px), "y": _pattern_labels(py), "extension": ok})
    details = {"x_patterns": len(x_reps), "y_patterns": len(all_patterns),
               "exceptional_found": len(failures), "mismatches": mismatches}
    # failures here are the expected exceptional patterns; the check passes
    # when they coincide with the characterization
    return LemmaReport("cut3-patterns", examined, failures, (time.perf_counter() - start) * 1000.0, details,
                       passed=not mismatches)


# -- 4-edge cuts ------------------------------------------------------------------

VISIBILITY_MODES = ("none", "pairwise")


def cut4_hypothesis(px: Sequence[Iterable[int]]) -> bool:
    sets = [frozenset(s) for s in px]
    return len(frozenset().union(*sets)) == 5 and not frozenset.intersection(*sets)


def cut4_extension_exists(px: Sequence[Iterable[int]], py: Sequence[Iterable[int]], mode: str = "none") -> bool:
    """Search for a Y-side relabeling plus cut-edge colors.

    Constraints, per cut edge ``x_i y_i``:

    * the 2-classes at ``x_i`` and at ``y_i`` are disjoint (those edges see
      each other through the cut edge);
    * the cut edge takes the 1-class if neither endpoint already has it,
      otherwise a 2-class outside both endpoint sets;
    * in ``"pairwise"`` mode the 2-classes on cut edges are distinct.
    """
    if mode not in VISIBILITY_MODES:
        raise ValueError(f"unknown visibility mode {mode!r}")
    pairwise = mode == "pairwise"
    px = [frozenset(s) for s in px]
    py = [frozenset(s) for s in py]
    ycolors = sorted(set().union(*py), key=lambda c: sum(c in s for s in py), reverse=True)
    allowed = {c: [t for t in TWO_CLASSES if all(t not in px[i] for i in range(4) if c in py[i])]
               for c in ycolors}
    image: dict[int, int] = {}
    taken: set[int] = set()

    def cut_edges_ok() -> bool:
        options = []
        for i in range(4):
            blocked = px[i] | {image[c] for c in py[i]}
            if ONE in blocked:
                options.append([t for t in TWO_CLASSES if t not in blocked])
        if pairwise:
            return has_sdr(options)
        return all(options)

    def assign(j: int) -> bool:
        if j == len(ycolors):
            return cut_edges_ok()
        c = ycolors[j]
        for t in allowed[c]:
            if t in taken:
                continue
            image[c] = t
            taken.add(t)
            if assign(j + 1):
                return True
            taken.discard(t)
            del image[c]
        return False

    return assign(0)


def cut4_x_patterns() -> list[Pattern]:
    """X-side patterns meeting the hypothesis, one per 2-class relabeling class."""
    classes = TWO_CLASSES + (ONE,)
    pairs = [frozenset(p) for p in combinations(classes, 2)]
    hits = (tuple(p) for p in product(pairs, repeat=4) if cut4_hypothesis(p))
    return _representatives(hits, TWO_CLASSES, fixed=(ONE,))


def cut4_y_patterns() -> list[Pattern]:
    pairs = _two_class_pairs()
    return _representatives((tuple(p) for p in product(pairs, repeat=4)), TWO_CLASSES)


def cut4_pattern_check(visibility_mode: str = "none") -> LemmaReport:
    if visibility_mode not in VISIBILITY_MODES:
        raise ValueError(f"unknown visibility mode {visibility_mode!r}")
    start = time.perf_counter()
    xs = cut4_x_patterns()
    ys = cut4_y_patterns()
    failures = []
    examined = 0
    for px in xs:
        for py in ys:
            examined += 1
            if not cut4_extension_exists(px, py, visibility_mode):
                failures.append({"x": _pattern_labels(px), "y": _pattern_labels(py)})
    details = {"mode": visibility_mode, "x_patterns": len(xs), "y_patterns": len(ys)}
    return LemmaReport(f"cut4-patterns-{visibility_mode}", examined, failures,
                       (time.perf_counter() - start) * 1000.0, details)


def _random_half(size: int, rng: random.Random) -> MultiGraph:
    """Simple connected graph, vertices 0..3 of degree 2, the rest of degree 3."""
    target = [2] * 4 + [3] * (size - 4)
    while True:
        stubs = [v for v in range(size) for _ in range(target[v])]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if any(u == v for u, v in pairs) or len({frozenset(p) for p in pairs}) != len(pairs):
            continue
        g = MultiGraph(size, pairs)
        if connected(g):
            return g


def _shuffled_solve(g: MultiGraph, rng: random.Random, opts: SolveOptions) -> Optional[list[int]]:
    """Good coloring of ``g`` found after a random edge reordering (for variety)."""
    order = list(range(g.m))
    rng.shuffle(order)
    shuffled = MultiGraph(g.n, [g.edges[e] for e in order])
    result = solve(shuffled, GOOD_SPEC, True, opts)
    if result.status is not Status.SAT:
        return None
    coloring = [0] * g.m
    for new, old in enumerate(order):
        coloring[old] = result.coloring[new]
    return coloring


HALF_SIZES = (6, 8, 10)


def cut4_instance_check(samples: int = 100, seed: int = 0, opts: SolveOptions = SolveOptions(),
                        max_attempts: Optional[int] = None) -> LemmaReport:
    """Concrete cubic graphs with a 4-edge matching cut.

    Each attempt joins two random halves (four degree-2 ports each) by a
    perfect matching of the ports, good-colors the X half on its own and
    keeps the instance only when the port color sets have union 5 and empty
    common intersection.  The rest of the graph is then completed with
    :func:`extend`.  Runs until ``samples`` instances pass the filter.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    start = time.perf_counter()
    rng = random.Random(seed)
    max_attempts = max_attempts or 200 * samples
    accepted = rejected = attempts = 0
    failures = []
    while accepted < samples and attempts < max_attempts:
        attempts += 1
        hx, hy = rng.choice(HALF_SIZES), rng.choice(HALF_SIZES)
        gx, gy = _random_half(hx, rng), _random_half(hy, rng)
        ports_y = list(range(4))
        rng.shuffle(ports_y)
        edges = list(gx.edges) + [(hx + u, hx + v) for u, v in gy.edges]
        edges += [(i, hx + ports_y[i]) for i in range(4)]
        g = MultiGraph(hx + hy, edges)

        x_coloring = _shuffled_solve(gx, rng, opts)
        if x_coloring is None:
            failures.append({"attempt": attempts, "reason": "half has no good coloring",
                             "graph": graph_reference(gx)})
            continue
        port_sets = [frozenset(used_at_vertex(gx, x_coloring, p)) for p in range(4)]
        if not cut4_hypothesis(port_sets):
            rejected += 1
            continue
        accepted += 1
        partial = x_coloring + [UNCOLORED] * (g.m - gx.m)
        result = extend(g, GOOD_SPEC, partial, True, opts)
        if result.status is not Status.SAT:
            failures.append({"attempt": attempts, "reason": f"extension {result.status.value}",
                             "graph": graph_reference(g), "partial": partial})
    details = {"seed": seed, "accepted": accepted, "hypothesis_rejected": rejected,
               "attempts": attempts, "requested": samples}
    if accepted < samples:
        failures.append({"reason": f"only {accepted} of {samples} instances met the hypothesis"})
    return LemmaReport("cut4-instances", accepted, failures, (time.perf_counter() - start) * 1000.0, details)
