"""Command-line front door for generation, counting, verification, and search.

Exit codes: 0 success (including NONE search outcomes and INFO checks),
1 failed verification or exceeded work cap or failed pipeline, 2 bad usage,
unreadable input, or input outside a command's domain.  Data goes to stdout
or --out; diagnostics go to stderr.  Identical inputs and flags produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional

from .census import walk_census
from .errors import (
    BipartitionError,
    DegreeZero,
    EmptyGraph,
    InvariantError,
    LemmaViolation,
    OddOrder,
    ParseError,
    PartitionFailure,
    PreconditionError,
    SizeLimit,
    TooManyEdges,
    WorkCapExceeded,
)
from .generators import (
    complete_one_factorization,
    hypercube,
    random_colored,
    random_linear_triple_system,
)
from .graph_core import Bipartition, dumps_graph, dumps_triples, loads_graph, loads_triples
from .regularize import lopsided_regularize, max_avg_degree_subgraph, split_regularize
from .search import find_rainbow_cycle, loose_cycle_via_reduction
from .verify import verify_graph, verify_regularization
from .walks import DEFAULT_WORK_CAP

_USAGE_ERRORS = (
    ParseError,
    InvariantError,
    SizeLimit,
    OddOrder,
    TooManyEdges,
    EmptyGraph,
    DegreeZero,
    PreconditionError,
    BipartitionError,
    OSError,
    ValueError,
)
_RUNTIME_ERRORS = (WorkCapExceeded, LemmaViolation, PartitionFailure)


def _dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_graph(fh.read())


def _parse_sides(text: str, n: int) -> Bipartition:
    try:
        left = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ParseError(f"--sides wants comma-separated integers, got {text!r}")
    return Bipartition.from_left(n, left)


def cmd_generate(args) -> int:
    if args.family == "hypercube":
        if args.d is None:
            raise ValueError("generate hypercube needs --d")
        doc = dumps_graph(hypercube(args.d))
    elif args.family == "onefactor":
        if args.n is None:
            raise ValueError("generate onefactor needs --n")
        doc = dumps_graph(complete_one_factorization(args.n))
    elif args.family == "random":
        if args.n is None or args.m is None:
            raise ValueError("generate random needs --n and --m")
        doc = dumps_graph(random_colored(args.n, args.m, args.seed))
    else:
        if args.n is None or args.m is None:
            raise ValueError("generate triples needs --n and --m")
        doc = dumps_triples(random_linear_triple_system(args.n, args.m, args.seed))
    _emit(doc, args.out)
    return 0


def cmd_census(args) -> int:
    graph = _load_graph(args.input)
    profile = walk_census(graph, args.k, work_cap=args.work_cap)
    _emit(_dump_json(profile.to_document()), args.out)
    return 0


def cmd_verify(args) -> int:
    graph = _load_graph(args.input)
    side = _parse_sides(args.sides, graph.n) if args.sides is not None else None
    report = verify_graph(
        graph,
        args.k,
        assume_rainbow_free=args.assume_rainbow_free,
        side=side,
        work_cap=args.work_cap,
    )
    _emit(_dump_json(report.to_document()), args.out)
    if not report.passed:
        print("verification failed", file=sys.stderr)
        return 1
    return 0


def cmd_regularize(args) -> int:
    graph = _load_graph(args.input)
    if args.mode == "split":
        result = split_regularize(graph)
        doc = {
            "graph": result.graph.to_document(),
            "psi": list(result.psi.mapping),
            "delta": result.delta,
            "report": verify_regularization(result).to_document(),
        }
        _emit(_dump_json(doc), args.out)
        return 0
    if args.k is None or args.sides is None:
        raise ValueError("regularize lopsided needs --k and --sides")
    sides = _parse_sides(args.sides, graph.n)
    densest = max_avg_degree_subgraph(graph, method=args.densest)
    trimmed = densest.graph
    keep = densest.vertices
    left = frozenset(i for i, orig in enumerate(keep) if orig in sides.left)
    trimmed_sides = Bipartition(left=left, right=frozenset(range(trimmed.n)) - left)
    result = lopsided_regularize(trimmed, trimmed_sides, args.k)
    doc = {
        "A": list(result.side_a),
        "B": list(result.side_b),
        "i": result.dyadic_index,
        "graph": result.subgraph.to_document(),
        "vertex_map": list(result.vertex_map),
        "trim": list(keep),
        "quadrant": result.quadrant,
        "avg_degree": str(result.avg_degree),
        "class_sizes": {str(i): size for i, size in sorted(result.class_sizes.items())},
        "peeled_edge_count": result.peeled_edge_count,
        "source_edge_count": result.source_edge_count,
        "report": verify_regularization(result).to_document(),
    }
    _emit(_dump_json(doc), args.out)
    return 0


def cmd_search(args) -> int:
    graph = _load_graph(args.input)
    certificate = find_rainbow_cycle(graph, length=args.length, work_cap=args.work_cap)
    if certificate is None:
        _emit("NONE\n", args.out)
    else:
        _emit(_dump_json(certificate.to_document()), args.out)
    return 0


def cmd_reduce3(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        system = loads_triples(fh.read())
    outcome = loose_cycle_via_reduction(
        system, seed=args.seed, retries=args.retries, work_cap=args.work_cap
    )
    for line in outcome.transcript:
        print(json.dumps(line, sort_keys=True), file=sys.stderr)
    if outcome.loose_cycle is None:
        _emit("NONE\n", args.out)
    else:
        _emit(_dump_json(outcome.loose_cycle.to_document()), args.out)
    return 0


def _scan_points(family: str, grid: str) -> list:
    points = []
    for token in grid.split(","):
        token = token.strip()
        if not token:
            continue
        if family == "random":
            if ":" not in token:
                raise ValueError("random grid points look like n:m")
            a, b = token.split(":", 1)
            points.append((int(a), int(b)))
        else:
            points.append((int(token),))
    if not points:
        raise ValueError("empty --grid")
    return points


def cmd_scan(args) -> int:
    rows = []
    for point in _scan_points(args.family, args.grid):
        if args.family == "hypercube":
            graph = hypercube(point[0])
        elif args.family == "onefactor":
            graph = complete_one_factorization(point[0])
        else:
            graph = random_colored(point[0], point[1], args.seed)
        certificate = find_rainbow_cycle(graph, work_cap=args.work_cap)
        n, m = graph.n, graph.edge_count
        rows.append(
            [
                args.family,
                n,
                m,
                args.k,
                1 if certificate is not None else 0,
                certificate.length if certificate is not None else "",
                32 * n * math.log2(5 * n) ** 2,
                32 * n * math.log(5 * n) ** 2,
                10**5 * args.k**3 * n ** (1 + 1 / args.k),
                args.seed,
            ]
        )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "family",
            "n",
            "m",
            "k",
            "found",
            "cycle_length",
            "threshold_allcycles_log2",
            "threshold_allcycles_ln",
            "threshold_evencycle",
            "seed",
        ]
    )
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return 0


def _add_common(p, work_cap: bool = True, out: bool = True) -> None:
    if work_cap:
        p.add_argument("--work-cap", type=int, default=DEFAULT_WORK_CAP,
                       help="abort if estimated or actual work exceeds this")
    if out:
        p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowlab",
        description="exact census, verification, regularization, and rainbow-cycle "
                    "search for properly edge-colored graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a test instance as JSON")
    p.add_argument("family", choices=["hypercube", "onefactor", "random", "triples"])
    p.add_argument("--d", type=int, help="hypercube dimension")
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--m", type=int, help="edge or triple count")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, work_cap=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", help="closed-walk degeneracy census")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True, help="half the walk length")
    _add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the exact inequality chain; exit 1 on FAIL")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sides", help="comma-separated left-side vertex ids of a bipartition")
    p.add_argument("--assume-rainbow-free", action="store_true",
                   help="run conditional checks without searching for a certificate")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("regularize", help="split or lopsided regularization plus report")
    p.add_argument("mode", choices=["split", "lopsided"])
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, help="cycle half-length (lopsided)")
    p.add_argument("--sides", help="left-side vertex ids (lopsided)")
    p.add_argument("--densest", choices=["exact", "greedy"], default="exact",
                   help="method for the densest-subgraph pre-trim (lopsided)")
    _add_common(p, work_cap=False)
    p.set_defaults(func=cmd_regularize)

    p = sub.add_parser("search", help="exhaustive rainbow-cycle search")
    p.add_argument("--input", required=True)
    p.add_argument("--length", type=int, help="exact cycle length; omit for shortest")
    p.add_argument("--seed", type=int, help="reserved; the search is deterministic")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reduce3", help="loose-cycle search via tripartite reduction")
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=100)
    _add_common(p)
    p.set_defaults(func=cmd_reduce3)

    p = sub.add_parser("scan", help="density sweep: edges vs rainbow-cycle presence")
    p.add_argument("--family", choices=["hypercube", "onefactor", "random"], required=True)
    p.add_argument("--grid", required=True,
                   help="comma-separated points: d (hypercube), n (onefactor), n:m (random)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _RUNTIME_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
