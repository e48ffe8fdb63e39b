"""Command-line front door over the graph and cover text formats.

Exit codes: 0 success, 1 invalid input, 2 precondition failure,
3 budget exceeded, 4 internal bound-violation (bug trap).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cover import cover_even, cover_main, verify_cover
from .circuits import family_from_text, family_to_text, signed_girth
from .errors import (
    BoundViolationError,
    BudgetExceededError,
    GraphFormatError,
    PreconditionError,
)
from .generate import random_cubic_signed_graph
from .graph import (
    DEFAULT_MAX_N,
    SignedGraph,
    is_two_edge_connected,
    negativeness,
    parse_signed_graph,
    serialize_signed_graph,
)
from .oracle import cdc_exists, exact_scc, gen_no_cdc

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_BOUND = 4


def _read_graph(path: str) -> SignedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_signed_graph(fh.read())
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}")


def _write_output(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _thread_cap() -> int:
    raw = os.environ.get("SGCC_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        raise GraphFormatError(f"SGCC_THREADS must be an integer, got {raw!r}")
    if cap < 0:
        raise GraphFormatError("SGCC_THREADS must be non-negative")
    return cap  # 0 = auto; execution is single-process either way


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    two_ec, _ = is_two_edge_connected(g)
    summary = negativeness(g, max_n=args.max_n)
    gs = signed_girth(g)
    gs_text = "inf" if gs == float("inf") else str(int(gs))
    print(
        f"n={g.n} m={g.m} cubic={'yes' if g.is_cubic() else 'no'} "
        f"2ec={'yes' if two_ec else 'no'} eps={summary.negativeness} "
        f"flow-admissible={'yes' if summary.flow_admissible else 'no'} gs={gs_text}"
    )
    return EXIT_OK


def cmd_cover(args) -> int:
    g = _read_graph(args.graph)
    if args.even_only:
        fam, report = cover_even(g, max_n=args.max_n)
    else:
        fam, report = cover_main(g, max_n=args.max_n, seed=args.seed)
    text = f"# seed={args.seed}\n" + family_to_text(fam)
    if args.out:
        _write_output(text, args.out)
    else:
        sys.stdout.write(text)
    if args.json:
        print(report.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        with open(args.cover, "r", encoding="utf-8") as fh:
            fam = family_from_text(g, fh.read())
    except OSError as exc:
        raise GraphFormatError(f"cannot read {args.cover}: {exc}")
    report = verify_cover(g, fam)
    print(report.to_json())
    return EXIT_OK


def cmd_oracle_scc(args) -> int:
    g = _read_graph(args.graph)
    result = exact_scc(g, budget_seconds=args.budget)
    sys.stdout.write(family_to_text(result.witness))
    print(
        json.dumps(
            {"optimum": result.optimum, "nodes": result.node_count, "status": result.status}
        )
    )
    return EXIT_OK if result.status == "exact" else EXIT_BUDGET


def cmd_oracle_cdc(args) -> int:
    g = _read_graph(args.graph)
    result = cdc_exists(g, budget_seconds=args.budget)
    if result.witness is not None:
        sys.stdout.write(family_to_text(result.witness))
    print(
        json.dumps(
            {"cdc": result.status, "nodes": result.node_count}
        )
    )
    return EXIT_OK if result.status in ("yes", "no") else EXIT_BUDGET


def cmd_gen_no_cdc(args) -> int:
    g = _read_graph(args.graph)
    built = gen_no_cdc(g)
    comments = [
        f"seed={args.seed}",
        f"two-edge-cut: {built.cut[0]} {built.cut[1]}",
        f"negative edges: {built.negative_pair[0]} {built.negative_pair[1]}",
    ]
    _write_output(serialize_signed_graph(built.graph, comments), args.out)
    return EXIT_OK


def cmd_gen_random(args) -> int:
    g = random_cubic_signed_graph(args.n, args.negatives, args.seed)
    comments = [f"seed={args.seed}", f"n={args.n} negatives={args.negatives}"]
    _write_output(serialize_signed_graph(g, comments), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgcc",
        description="Construct, verify, and benchmark short circuit covers of signed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--even-only", action="store_true", help="require even negativeness")
        p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
        p.add_argument("--seed", type=int, default=0, help="64-bit seed for randomized parts")
        p.add_argument(
            "--max-n", type=int, default=DEFAULT_MAX_N, help="exact negativeness vertex budget"
        )
        p.add_argument("--out", default=None, help="write the primary output to a file")

    p = sub.add_parser("analyze", help="print basic structure and signature facts")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cover", help="construct a bounded-length circuit cover")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="verify a cover file against a graph")
    p.add_argument("graph")
    p.add_argument("cover")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-scc", help="exact shortest circuit cover")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_oracle_scc)

    p = sub.add_parser("oracle-cdc", help="exact circuit double cover decision")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_oracle_cdc)

    p = sub.add_parser("gen-no-cdc", help="sign a 2-edge-cut graph to kill double covers")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_gen_no_cdc)

    p = sub.add_parser("gen-random", help="random 2-edge-connected cubic signed graph")
    p.add_argument("n", type=int)
    p.add_argument("negatives", type=int)
    common(p)
    p.set_defaults(func=cmd_gen_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BoundViolationError as exc:
        print(f"internal bound violation: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
