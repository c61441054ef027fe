"""Serialization: graph6, the line-oriented ``mg`` multigraph format, JSON documents."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence

from .graph import MultiGraph
from .packing import PackingSpec

GRAPH6_MAX_N = 62


class FormatError(ValueError):
    pass


def parse_graph6(line: str) -> MultiGraph:
    text = line.strip("\r\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise FormatError("empty graph6 line")
    data = [ord(ch) - 63 for ch in text]
    if any(not 0 <= x <= 63 for x in data):
        raise FormatError(f"graph6 byte out of range [63, 126] in {line!r}")
    n = data[0]
    if n > GRAPH6_MAX_N:
        raise FormatError("only the short graph6 size form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise FormatError(f"graph6 line for n={n} needs {expected} bytes, got {len(data)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (data[1 + k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    pad = (6 - nbits % 6) % 6
    if pad and data[-1] & ((1 << pad) - 1):
        raise FormatError("non-zero padding bits in graph6 line")
    return MultiGraph(n, edges)


def emit_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise FormatError("graph6 cannot encode parallel edges")
    if g.n > GRAPH6_MAX_N:
        raise FormatError("only the short graph6 size form (n <= 62) is supported")
    present = {frozenset(e) for e in g.edges}
    bits = [frozenset((u, v)) in present for v in range(1, g.n) for u in range(v)]
    bits += [False] * ((6 - len(bits) % 6) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_multigraph_text(text: str) -> MultiGraph:
    """Read the ``mg`` format: header ``mg <n> <m>`` then ``e <u> <v>`` lines."""
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise FormatError("empty multigraph text")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "mg":
        raise FormatError(f"bad header {lines[0]!r}, expected 'mg <n> <m>'")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise FormatError("negative sizes in header")
    edges = []
    for body in lines[1:]:
        parts = body.split()
        if len(parts) != 3 or parts[0] != "e":
            raise FormatError(f"bad edge line {body!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"bad edge line {body!r}") from None
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range in {body!r}")
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    return MultiGraph(n, edges)


def emit_multigraph_text(g: MultiGraph) -> str:
    return "\n".join([f"mg {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.edges]) + "\n"


def read_graph(text: str, fmt: Optional[str] = None) -> MultiGraph:
    """Parse either format; ``fmt`` is ``"g6"``, ``"mg"`` or ``None`` to sniff."""
    if fmt is None:
        fmt = "mg" if text.lstrip().startswith(("mg", "#")) else "g6"
    if fmt == "mg":
        return parse_multigraph_text(text)
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise FormatError(f"unknown graph format {fmt!r}")


def graph_reference(g: MultiGraph) -> dict:
    """Embeddable graph payload that reproduces ``g`` with the same edge ids.

    graph6 stores edges in its own column order, so it is used only when
    ``g`` already lists its edges that way.
    """
    if g.is_simple() and g.n <= GRAPH6_MAX_N:
        payload = emit_graph6(g)
        if parse_graph6(payload).edges == g.edges:
            return {"format": "g6", "payload": payload}
    return {"format": "mg", "payload": emit_multigraph_text(g)}


@dataclass
class ColoringDocument:
    spec: list[int]
    good: bool
    colors: dict[int, int]
    graph: dict

    @classmethod
    def build(cls, g: MultiGraph, spec: PackingSpec, coloring: Sequence[Optional[int]], good: bool) -> "ColoringDocument":
        colors = {e: c for e, c in enumerate(coloring) if c is not None}
        return cls(list(spec.s), good, colors, graph_reference(g))

    def to_dict(self) -> dict:
        return {
            "spec": list(self.spec),
            "good": self.good,
            "colors": {str(e): c for e, c in sorted(self.colors.items())},
            "graph": dict(self.graph),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ColoringDocument":
        try:
            colors = {int(e): c for e, c in data["colors"].items()}
            return cls(list(data["spec"]), bool(data["good"]), colors, dict(data["graph"]))
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed coloring document: {exc}") from None

    def load_graph(self) -> MultiGraph:
        return read_graph(self.graph["payload"], self.graph["format"])

    def coloring_for(self, g: MultiGraph) -> list[Optional[int]]:
        out: list[Optional[int]] = [None] * g.m
        for e, c in self.colors.items():
            if not 0 <= e < g.m:
                raise FormatError(f"edge index {e} out of range for {g.m} edges")
            out[e] = c
        return out


def _plain(obj: Any) -> Any:
    if hasattr(obj, "to_dict"):
        return _plain(obj.to_dict())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    return obj


def emit_report_json(report: Any, include_timing: bool = True) -> str:
    """Stable JSON: sorted keys, fixed indentation, trailing newline.

    ``include_timing=False`` drops every ``wall_ms`` field so that two runs of
    the same computation produce identical bytes.
    """
    data = _plain(report)
    if not include_timing:
        data = _strip_timing(data)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _strip_timing(data: Any) -> Any:
    if isinstance(data, dict):
        return {k: _strip_timing(v) for k, v in data.items() if k != "wall_ms"}
    if isinstance(data, list):
        return [_strip_timing(v) for v in data]
    return data
