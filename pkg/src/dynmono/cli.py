"""Command-line surface: gen, thresholds, simulate, find, bounds, audit.

Structured output (JSON or raw file content) goes to standard out, log
lines to standard error.  Exit codes: 0 on success and on audits with zero
failures, 1 on property violations, 2 on usage or IO errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import AuditConfig, audit
from .bounds import bound_report
from .dynamics import is_dynamo, propagate
from .errors import BudgetExceededError, ConstructionError, GraphFormatError
from .graphs import GENERATOR_FAMILIES, Graph, generate, parse_graph, render_graph
from .minimize import exact_min_dynamo, greedy_shrink
from .strict_majority import half_dynamo
from .thresholds import (
    ThresholdAssignment,
    assign_thresholds,
    parse_thresholds,
    render_thresholds,
)

USAGE_ERROR = 2
VIOLATION = 1


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(document: dict) -> None:
    print(json.dumps(document, indent=2, sort_keys=True))


def _write_or_print(content: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(content)
    else:
        Path(out).write_text(content, encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _resolve_thresholds(g: Graph, rule: str) -> ThresholdAssignment:
    if rule.startswith("file:"):
        text = Path(rule.split(":", 1)[1]).read_text(encoding="utf-8")
        return parse_thresholds(text, g.n)
    return assign_thresholds(g, rule)


def _parse_vertex_set(raw: str) -> list[int]:
    raw = raw.strip()
    if not raw:
        return []
    try:
        return [int(tok) for tok in raw.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed vertex set {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynmono",
        description="Dynamic monopolies: generation, simulation, search, bounds, audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write it in the text format")
    gen.add_argument("--family", required=True, choices=GENERATOR_FAMILIES)
    gen.add_argument("--n", type=int, help="vertex-count parameter")
    gen.add_argument("--k", type=int, help="leaf count (star family)")
    gen.add_argument("--p", type=float, help="edge probability (gnp family)")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed (gnp family)")
    gen.add_argument(
        "--offsets", type=str, help="comma-separated circulant offsets, e.g. 1,2"
    )
    gen.add_argument("--out", type=str, help="output path (default: stdout)")

    thr = sub.add_parser("thresholds", help="compute thresholds for a graph")
    thr.add_argument("--graph", required=True)
    thr.add_argument("--rule", required=True, help="strict-majority | simple-majority | constant:<k> | file:<path>")
    thr.add_argument("--out", type=str, help="output path (default: stdout)")

    sim = sub.add_parser("simulate", help="run the activation process from a seed set")
    sim.add_argument("--graph", required=True)
    sim.add_argument("--thresholds", required=True)
    sim.add_argument("--seed", type=str, default="", help="comma-separated vertex ids")

    find = sub.add_parser("find", help="construct a dynamo")
    find.add_argument("--strategy", required=True, choices=("ordering", "greedy", "exact"))
    find.add_argument("--graph", required=True)
    find.add_argument("--thresholds", required=True)
    find.add_argument("--budget", type=int, help="work limit for the exact strategy")

    bnd = sub.add_parser("bounds", help="report all applicable closed-form bounds")
    bnd.add_argument("--graph", required=True)
    bnd.add_argument("--thresholds", required=True)
    bnd.add_argument("--heavy", action="store_true", help="also compute cover/chromatic/matching numbers")

    aud = sub.add_parser("audit", help="cross-check the library invariants on random corpora")
    aud.add_argument("--checks", type=str, default="all", help="comma-separated check names or 'all'")
    aud.add_argument("--count", type=int, default=200, help="instances per randomized check")
    aud.add_argument("--max-n", type=int, default=8, help="largest random instance size")
    aud.add_argument("--seed", type=int, default=0, help="corpus RNG seed")
    aud.add_argument("--n-range", type=str, default="3..8", help="n range a..b for enumerated checks")
    aud.add_argument("--budget", type=int, help="work limit per exact solve")

    return parser


def _cmd_gen(args: argparse.Namespace) -> int:
    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.p is not None:
        params["p"] = args.p
    if args.offsets is not None:
        params["offsets"] = [int(tok) for tok in args.offsets.split(",") if tok]
    params["seed"] = args.seed
    try:
        g = generate(args.family, **params)
    except KeyError as exc:
        raise ValueError(f"missing parameter {exc.args[0]!r} for family {args.family}") from exc
    _write_or_print(render_graph(g), args.out)
    _log(f"generated {args.family} graph: {g.n} vertices, {g.edge_count} edges")
    return 0


def _cmd_thresholds(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    tau = _resolve_thresholds(g, args.rule)
    _write_or_print(render_thresholds(tau), args.out)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    tau = _resolve_thresholds(g, args.thresholds)
    seed = _parse_vertex_set(args.seed)
    trace = propagate(g, tau, seed)
    _emit(trace.to_dict())
    return 0


def _cmd_find(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    tau = _resolve_thresholds(g, args.thresholds)
    if args.strategy == "ordering":
        dynamo = half_dynamo(g)
    elif args.strategy == "greedy":
        dynamo = greedy_shrink(g, tau)
    else:
        dynamo = exact_min_dynamo(g, tau, budget=args.budget)
    verified = is_dynamo(g, tau, dynamo)
    _emit(
        {
            "strategy": args.strategy,
            "dynamo": sorted(dynamo),
            "size": len(dynamo),
            "verified": verified,
        }
    )
    if not verified:
        # the ordering strategy builds a strict-majority dynamo, which may
        # not satisfy larger caller-supplied thresholds
        _log("constructed set is not a dynamo for the supplied thresholds")
        return VIOLATION
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    tau = _resolve_thresholds(g, args.thresholds)
    report = bound_report(g, tau, heavy=args.heavy)
    _emit(report.to_dict())
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    raw = args.n_range.split("..")
    if len(raw) != 2:
        raise ValueError(f"malformed n range {args.n_range!r}, expected a..b")
    config = AuditConfig(
        checks=tuple(tok for tok in args.checks.split(",") if tok),
        seed=args.seed,
        count=args.count,
        max_n=args.max_n,
        n_range=(int(raw[0]), int(raw[1])),
        budget=args.budget,
    )
    report = audit(config)
    print(report.to_json())
    _log(
        f"audited {report.instances_checked} instances in {report.elapsed:.2f}s, "
        f"{report.failures} failures"
    )
    return 0 if report.failures == 0 else VIOLATION


_COMMANDS = {
    "gen": _cmd_gen,
    "thresholds": _cmd_thresholds,
    "simulate": _cmd_simulate,
    "find": _cmd_find,
    "bounds": _cmd_bounds,
    "audit": _cmd_audit,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (GraphFormatError, OSError, ValueError) as exc:
        _log(f"error: {exc}")
        return USAGE_ERROR
    except (BudgetExceededError, ConstructionError) as exc:
        _log(f"error: {exc}")
        return VIOLATION


def main() -> None:
    sys.exit(run(sys.argv[1:]))
