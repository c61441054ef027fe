"""Command-line front end.

Exit codes: 0 success (SAT / check passed), 10 semantic negative (UNSAT,
inconclusive, invalid coloring, failed check), 2 usage or input error,
1 internal error.  Results go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import lemmas
from .enumeration import EnumerationSpec, enumerate_subcubic, random_subcubic_multigraph
from .formats import (
    ColoringDocument,
    FormatError,
    emit_graph6,
    emit_multigraph_text,
    emit_report_json,
    graph_reference,
    read_graph,
)
from .graph import GraphError
from .packing import SpecError, parse_spec, verify
from .solver import SolveOptions, Status, solve

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 10

log = logging.getLogger("subcubic_packing")


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _spec(text: str):
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj) -> None:
    sys.stdout.write(emit_report_json(obj))


def _cmd_solve(args) -> int:
    spec = _spec(args.spec)
    g = read_graph(_read_text(args.input), args.format)
    opts = SolveOptions(node_limit=args.node_limit, time_limit_ms=args.time_limit_ms,
                        symmetry_breaking=not args.no_symmetry, hall_pruning=not args.no_hall,
                        seed_heuristic=args.seed_heuristic)
    result = solve(g, spec, args.good, opts)
    out = {"status": result.status.value, "spec": list(spec.s), "good": args.good,
           "stats": result.stats.to_dict()}
    if result.status is Status.SAT:
        out["document"] = ColoringDocument.build(g, spec, result.coloring, args.good).to_dict()
    _emit(out)
    return EXIT_OK if result.status is Status.SAT else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    spec = _spec(args.spec)
    try:
        data = json.loads(_read_text(args.coloring))
    except json.JSONDecodeError as exc:
        raise UsageError(f"coloring file is not JSON: {exc}") from None
    if isinstance(data, dict) and "document" in data:
        data = data["document"]
    doc = ColoringDocument.from_dict(data)
    g = doc.load_graph()
    coloring = doc.coloring_for(g)
    violations = verify(g, spec, coloring, args.good)
    uncolored = [e for e, c in enumerate(coloring) if c is None]
    _emit({"valid": not violations, "complete": not uncolored, "uncolored": uncolored,
           "spec": list(spec.s), "good": args.good, "violations": [v.to_dict() for v in violations]})
    return EXIT_OK if not violations else EXIT_NEGATIVE


def _report_exit(*reports) -> int:
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def _cmd_lemma9(args) -> int:
    if not 1 <= args.max_n <= 9:
        raise UsageError("--max-n must lie in 1..9")
    report = lemmas.lemma9_check(args.max_n)
    _emit(report)
    return _report_exit(report)


def _cmd_cut3(args) -> int:
    report = lemmas.cut3_pattern_check()
    _emit(report)
    return _report_exit(report)


def _cmd_cut4(args) -> int:
    reports = [lemmas.cut4_pattern_check(args.mode)]
    if args.instances:
        reports.append(lemmas.cut4_instance_check(args.instances, args.seed))
    _emit({"reports": reports})
    return _report_exit(*reports)


def _cmd_sharpness(args) -> int:
    report = lemmas.sharpness_check()
    _emit(report)
    return _report_exit(report)


def _cmd_petersen(args) -> int:
    report = lemmas.petersen_check()
    _emit(report)
    return _report_exit(report)


def _cmd_enumerate(args) -> int:
    try:
        spec = EnumerationSpec(args.n, connected_only=not args.all)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count_only:
        count = sum(1 for _ in enumerate_subcubic(spec))
        _emit({"n": args.n, "connected_only": spec.connected_only, "count": count})
        return EXIT_OK
    for g in enumerate_subcubic(spec):
        sys.stdout.write(emit_graph6(g) + "\n")
    return EXIT_OK


def _cmd_random(args) -> int:
    if args.n < 2 or not 0.0 <= args.parallel_prob <= 1.0:
        raise UsageError("--n must be >= 2 and --parallel-prob within [0, 1]")
    g = random_subcubic_multigraph(args.n, args.parallel_prob, args.seed)
    if args.text:
        sys.stdout.write(emit_multigraph_text(g))
    else:
        _emit({"n": args.n, "seed": args.seed, "parallel_prob": args.parallel_prob,
               "graph": graph_reference(g), "mg": emit_multigraph_text(g)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subcubic-packing",
                                     description="Packing edge-colorings of subcubic multigraphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a packing edge-coloring")
    p.add_argument("--spec", required=True, help='packing sequence, e.g. "1,2^7"')
    p.add_argument("--good", action="store_true", help="1-classes only on edges between 3-vertices")
    p.add_argument("--in", dest="input", required=True, help="graph file, '-' for stdin")
    p.add_argument("--format", choices=("g6", "mg"), default=None)
    p.add_argument("--node-limit", type=int, default=0)
    p.add_argument("--time-limit-ms", type=int, default=0)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--no-hall", action="store_true")
    p.add_argument("--seed-heuristic", action="store_true", help="start from a maximum matching in the 1-class")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring document")
    p.add_argument("--spec", required=True)
    p.add_argument("--good", action="store_true")
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemma9", help="all connected subcubic graphs on <= N vertices")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=_cmd_lemma9)

    p = sub.add_parser("cut3", help="3-edge-cut color pattern sweep")
    p.set_defaults(func=_cmd_cut3)

    p = sub.add_parser("cut4", help="4-edge-cut color pattern sweep and instances")
    p.add_argument("--mode", choices=lemmas.VISIBILITY_MODES, required=True)
    p.add_argument("--instances", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_cut4)

    p = sub.add_parser("sharpness", help="the 7-vertex sharpness example")
    p.set_defaults(func=_cmd_sharpness)

    p = sub.add_parser("petersen", help="(1,2^5) coloring of the Petersen graph")
    p.set_defaults(func=_cmd_petersen)

    p = sub.add_parser("enumerate", help="graph6 lines of subcubic graphs on N vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("random", help="seeded random connected subcubic multigraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--parallel-prob", type=float, default=0.0)
    p.add_argument("--text", action="store_true", help="print the raw mg text instead of JSON")
    p.set_defaults(func=_cmd_random)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        log.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
