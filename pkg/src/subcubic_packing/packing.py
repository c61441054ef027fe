"""Packing sequences, partial colorings and the availability calculus.

A coloring is a sequence indexed by edge id holding a class index or
``None`` (uncolored).  Class ``i`` with distance parameter ``s[i]`` forbids
two of its edges at line-graph distance ``<= s[i]``; a class with
``s[i] == 1`` is a matching, with ``s[i] == 2`` an induced matching.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .graph import MultiGraph, degrees, edge_distance, edge_distances_from

UNCOLORED = None

Coloring = Sequence[Optional[int]]


class SpecError(ValueError):
    pass


class InconsistentColoring(ValueError):
    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__("; ".join(v.detail for v in violations))


@dataclass(frozen=True)
class PackingSpec:
    s: tuple[int, ...]

    def __post_init__(self):
        if not self.s:
            raise SpecError("packing sequence must be non-empty")
        if any(not isinstance(x, int) or x < 1 for x in self.s):
            raise SpecError(f"distance parameters must be positive integers: {self.s}")
        if any(a > b for a, b in zip(self.s, self.s[1:])):
            raise SpecError(f"packing sequence must be non-decreasing: {self.s}")

    @property
    def k(self) -> int:
        return len(self.s)

    def one_classes(self) -> list[int]:
        return [i for i, x in enumerate(self.s) if x == 1]

    def __str__(self) -> str:
        terms = []
        i = 0
        while i < len(self.s):
            j = i
            while j < len(self.s) and self.s[j] == self.s[i]:
                j += 1
            terms.append(str(self.s[i]) if j - i == 1 else f"{self.s[i]}^{j - i}")
            i = j
        return "(" + ",".join(terms) + ")"


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_spec(text: str) -> PackingSpec:
    """Expand shorthand such as ``"1,2^7"`` into a :class:`PackingSpec`."""
    compact = re.sub(r"\s+", "", text).strip("()")
    if not compact:
        raise SpecError("empty packing sequence")
    values: list[int] = []
    for term in compact.split(","):
        match = _TERM.match(term)
        if not match:
            raise SpecError(f"cannot parse term {term!r} in {text!r}")
        value = int(match.group(1))
        reps = int(match.group(2)) if match.group(2) is not None else 1
        if value < 1 or reps < 1:
            raise SpecError(f"term {term!r} must use positive integers")
        values.extend([value] * reps)
    return PackingSpec(tuple(values))


class ViolationKind(str, Enum):
    DISTANCE_CONFLICT = "DISTANCE_CONFLICT"
    ONE_COLOR_ENDPOINT = "ONE_COLOR_ENDPOINT"
    BAD_CLASS_INDEX = "BAD_CLASS_INDEX"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    edges: tuple[int, ...]
    detail: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "edges": list(self.edges), "detail": self.detail}


def verify(g: MultiGraph, spec: PackingSpec, c: Coloring, good: bool = False) -> list[Violation]:
    """List every way the (partial) coloring ``c`` breaks the packing rules.

    Uncolored edges never violate anything.  With ``good`` set, edges in a
    class with distance parameter 1 must have both endpoints of degree 3.
    """
    if len(c) != g.m:
        raise ValueError(f"coloring has {len(c)} entries for {g.m} edges")
    out: list[Violation] = []
    members: dict[int, list[int]] = {}
    for e, cls in enumerate(c):
        if cls is UNCOLORED:
            continue
        if not (isinstance(cls, int) and 0 <= cls < spec.k):
            out.append(Violation(ViolationKind.BAD_CLASS_INDEX, (e,),
                                 f"edge {e} has class {cls!r}, expected 0..{spec.k - 1}"))
            continue
        members.setdefault(cls, []).append(e)

    for cls in sorted(members):
        s = spec.s[cls]
        edges = members[cls]
        for a in range(len(edges)):
            for b in range(a + 1, len(edges)):
                e1, e2 = edges[a], edges[b]
                d = edge_distance(g, e1, e2, cap=s)
                if d <= s:
                    out.append(Violation(ViolationKind.DISTANCE_CONFLICT, (e1, e2),
                                         f"edges {e1} and {e2} share class {cls} at distance {d} <= {s}"))

    if good:
        deg = degrees(g)
        for cls in sorted(members):
            if spec.s[cls] != 1:
                continue
            for e in members[cls]:
                u, v = g.edges[e]
                if deg[u] != 3 or deg[v] != 3:
                    out.append(Violation(ViolationKind.ONE_COLOR_ENDPOINT, (e,),
                                         f"edge {e} in 1-class {cls} has endpoint degrees ({deg[u]}, {deg[v]})"))
    return out


def used_at_vertex(g: MultiGraph, c: Coloring, v: int) -> set[int]:
    return {c[e] for e in g.incident_edges(v) if c[e] is not UNCOLORED}


def seen_classes(g: MultiGraph, spec: PackingSpec, c: Coloring, e: int) -> set[int]:
    """Classes that some colored edge near ``e`` blocks for ``e``.

    Class ``i`` is blocked when an edge of class ``i`` lies within distance
    ``s[i]`` of ``e``: incident edges for 1-classes, seen edges for 2-classes.
    """
    g._check_edge(e)
    near = edge_distances_from(g, e, max(spec.s))
    return {c[f] for f, d in near.items() if c[f] is not UNCOLORED and d <= spec.s[c[f]]}


def availability(g: MultiGraph, spec: PackingSpec, c: Coloring, good: bool = False) -> dict[int, frozenset[int]]:
    problems = verify(g, spec, c, good)
    if problems:
        raise InconsistentColoring(problems)
    deg = degrees(g)
    one = set(spec.one_classes())
    everything = set(range(spec.k))
    table = {}
    for e, cls in enumerate(c):
        if cls is not UNCOLORED:
            continue
        allowed = everything - seen_classes(g, spec, c, e)
        u, v = g.edges[e]
        if good and (deg[u] != 3 or deg[v] != 3):
            allowed -= one
        table[e] = frozenset(allowed)
    return table


def is_matching(g: MultiGraph, edges: Sequence[int]) -> bool:
    touched: set[int] = set()
    for e in edges:
        u, v = g.edges[e]
        if u in touched or v in touched:
            return False
        touched.update((u, v))
    return True


def is_induced_matching(g: MultiGraph, edges: Sequence[int]) -> bool:
    """A matching such that no edge of ``g`` joins endpoints of two of its edges."""
    if not is_matching(g, edges):
        return False
    owner = {}
    for e in edges:
        for x in g.edges[e]:
            owner[x] = e
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            return False
    return True
