"""Command-line front end.

    perfdiv check  (G6 | --name KEY | --edges "N:u-v,...")  [--format text|json]
    perfdiv scan   --conjecture ID (--input FILE | --all-n K) [--jobs J] [--format text|json]
    perfdiv verify-paper [--quick] [--only KEYS]
    perfdiv gen    (--all-n K | --random N P SEED | --glued N1 N2 C P SEED)

Exit codes: 0 ok, 1 theorem violated / check failed, 2 input error,
3 conjecture counterexample discovered.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .conjectures import get_spec, registry, scan
from .core import (
    CapExceeded,
    Graph,
    GraphError,
    exponential_cap,
    graph_from_edges,
    named,
    parse_graph6,
    write_graph6,
)
from .decomposition import find_bisimplicial, find_clique_cutset, find_simplicial
from .divisibility import find_good_partition, is_k_divisible, is_perfectly_divisible
from .generators import enumerate_small, enumerate_up_to, random_glued, random_graph
from .invariants import alpha, chi, omega
from .patterns import find_induced
from .perfection import is_perfect
from .verification import CHECKS, CheckResult, run_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISCOVERY = 0, 1, 2, 3


def parse_edges(spec: str) -> Graph:
    """``"5:0-1,1-2"`` -> graph on 5 vertices with those edges."""
    try:
        head, _, body = spec.partition(":")
        n = int(head)
        edges = []
        for item in filter(None, (t.strip() for t in body.split(","))):
            u, v = item.split("-")
            edges.append((int(u), int(v)))
    except ValueError:
        raise GraphError(f"cannot parse edge spec {spec!r}; expected 'N:u-v,u-v'") from None
    return graph_from_edges(n, edges)


def _capped(fn, *args) -> Any:
    try:
        return fn(*args)
    except CapExceeded as exc:
        return {"skipped": str(exc)}


def check_report(g: Graph) -> dict:
    """Everything the toolkit knows about one graph, each claim with its certificate."""
    w, wclique = omega(g)
    a, astable = alpha(g)
    rep: dict[str, Any] = {
        "graph6": write_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "omega": {"value": w, "clique": sorted(wclique)},
        "alpha": {"value": a, "stable_set": sorted(astable)},
    }

    def _chi():
        k, col = chi(g)
        return {"value": k, "coloring": list(col.assignment)}

    def _perf():
        v = is_perfect(g)
        out = {"perfect": v.perfect}
        if v.witness is not None:
            out["witness"] = {"kind": v.witness.kind, "cycle": list(v.witness.cycle)}
        return out

    def _gp():
        if g.n == 0:
            return None
        gp = find_good_partition(g)
        return None if gp is None else {"a": sorted(gp.a), "b": sorted(gp.b)}

    def _div(fn, *extra):
        v = fn(g, *extra)
        out = {"holds": v.holds}
        if v.failing_subgraph is not None:
            out["failing_subgraph"] = sorted(v.failing_subgraph)
        return out

    rep["chi"] = _capped(_chi)
    rep["perfection"] = _capped(_perf)
    rep["good_partition"] = _capped(_gp)
    rep["perfectly_divisible"] = _capped(_div, is_perfectly_divisible)
    rep["two_divisible"] = _capped(_div, is_k_divisible, 2)
    split = find_clique_cutset(g)
    rep["clique_cutset"] = None if split is None else {
        "c": sorted(split.c), "v1": sorted(split.v1), "v2": sorted(split.v2)}
    rep["simplicial"] = find_simplicial(g)
    rep["bisimplicial"] = find_bisimplicial(g)
    free = {}
    for key, label in (("p5", "P5"), ("c5", "C5"), ("k23", "K2,3"), ("fourK1", "4K1"),
                       ("complete(3)", "triangle")):
        emb = find_induced(g, named(key))
        free[label] = {"free": emb is None, **({} if emb is None else {"embedding": list(emb.map)})}
    rep["pattern_free"] = free
    return rep


def render_check(rep: dict) -> str:
    lines = ["graph6".ljust(21) + rep["graph6"], "n, m".ljust(21) + f"{rep['n']}, {rep['edges']}"]
    for key in ("omega", "alpha", "chi", "perfection", "good_partition", "perfectly_divisible",
                "two_divisible", "clique_cutset", "simplicial", "bisimplicial"):
        lines.append(f"{key:<21}{json.dumps(rep[key], sort_keys=True)}")
    for label, info in rep["pattern_free"].items():
        lines.append(f"{label + '-free':<21}{json.dumps(info, sort_keys=True)}")
    return "\n".join(lines)


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.name:
        return named(args.name)
    if args.edges:
        return parse_edges(args.edges)
    if args.graph6:
        return parse_graph6(args.graph6)
    raise GraphError("give a graph6 line, --name or --edges")


def cmd_check(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep = check_report(g)
    print(json.dumps(rep, indent=2, sort_keys=True) if args.format == "json" else render_check(rep))
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        spec = get_spec(args.conjecture)
    except KeyError as exc:
        print(f"error: {exc.args[0]}; known: {', '.join(s.id for s in registry())}", file=sys.stderr)
        return EXIT_INPUT
    params: dict[str, Any] = {"jobs": args.jobs}
    if args.all_n is not None:
        try:
            corpus: Any = list(enumerate_up_to(args.all_n))
        except GraphError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        params["all_n"] = args.all_n
    else:
        try:
            if args.input == "-":
                corpus = sys.stdin.read().splitlines()
            else:
                with open(args.input) as fh:
                    corpus = fh.read().splitlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        params["input"] = args.input
    report = scan(corpus, spec, cap=args.cap, jobs=args.jobs, params=params)
    timing = not args.no_timing
    print(report.to_json(timing) if args.format == "json" else report.render_text(timing))
    return report.exit_code


def render_results(results: list[CheckResult]) -> str:
    lines = ["statement-to-check map:"]
    for r in results:
        lines.append(f"  {r.key}: {r.anchor} -> {r.title}")
    lines.append("")
    for r in results:
        lines.append(r.line())
        lines.extend("    " + d for d in r.details)
    lines.append("")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines)


def verify_output(quick: bool = False, only: set[str] | None = None) -> tuple[str, bool]:
    results = run_all(quick, only)
    return render_results(results), all(r.passed for r in results)


def cmd_verify(args: argparse.Namespace) -> int:
    only = set(args.only.split(",")) if args.only else None
    if only and not only <= set(CHECKS):
        print(f"error: unknown check keys {sorted(only - set(CHECKS))}", file=sys.stderr)
        return EXIT_INPUT
    text, ok = verify_output(args.quick, only)
    print(text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.all_n is not None:
            graphs = list(enumerate_small(args.all_n))
        elif args.random:
            n, p, seed = args.random
            graphs = [random_graph(int(n), float(p), int(seed))]
        elif args.glued:
            n1, n2, c, p, seed = args.glued
            graphs = [random_glued(int(n1), int(n2), int(c), float(p), int(seed))[0]]
        else:
            raise GraphError("choose one of --all-n, --random, --glued")
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for g in graphs:
        print(write_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfdiv", description="Exact perfect-divisibility toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyse one graph")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--name", help="catalog key, e.g. figure1, c5, cycle(7)")
    p.add_argument("--edges", help='edge list "N:u-v,u-v"')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="scan a corpus for counterexamples")
    p.add_argument("--conjecture", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file, or - for stdin")
    src.add_argument("--all-n", type=int, dest="all_n", help="all graphs on at most K vertices")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=None, help=f"vertex cap (default {exponential_cap()})")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit duration for byte-stable output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="run the acceptance battery")
    p.add_argument("--quick", action="store_true", help="reduced sample sizes")
    p.add_argument("--only", help="comma-separated check keys, e.g. 1,3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit graph6 lines")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--all-n", type=int, dest="all_n", help="all graphs on exactly K vertices")
    grp.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"))
    grp.add_argument("--glued", nargs=5, metavar=("N1", "N2", "C", "P", "SEED"))
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
