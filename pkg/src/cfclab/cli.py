"""``cfclab`` command line.

Exit codes: 0 success, 1 usage or input error, 2 coloring invalid, 3 node
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .decompose import POLICIES, algorithm1, min_depth
from .errors import BudgetExceeded, CfcError
from .exact import cfc_exact, default_budget, general_bounds, is_cfc_critical, oc_exact, rank_exact
from .families import FAMILIES, FamilySpec, generate, generate_with_certificate
from .sweep import family_jobs, random_jobs, run, summarize, write_report
from .verify import is_cfc_coloring, is_edge_ranking, is_odd_connected

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj))
    else:
        for key, value in obj.items():
            print(f"{key}: {value}")


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, tuple(args.params), args.seed)
    if args.certificate is None:
        tree = generate(spec)
        sys.stdout.write(formats.write_tree(tree, args.canonical))
        return EXIT_OK
    tree, coloring, value = generate_with_certificate(spec)
    sys.stdout.write(formats.write_tree(tree))
    text = f"# claimed cfc {value}\n" + formats.write_coloring(coloring)
    if args.certificate == "-":
        sys.stdout.write(text)
    else:
        with open(args.certificate, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


_CHECKS = {"cfc": is_cfc_coloring, "odd": is_odd_connected, "ranking": is_edge_ranking}


def cmd_verify(args) -> int:
    tree, rest = formats.read_tree(_read_input(args.tree))
    if args.coloring:
        coloring = formats.read_coloring(_read_input(args.coloring), tree.m)
    else:
        coloring = formats.read_coloring(rest, tree.m)
    verdict = _CHECKS[args.mode](tree, coloring)
    if verdict:
        print("VALID")
        return EXIT_OK
    print(f"WITNESS {verdict.witness[0]} {verdict.witness[1]}")
    return EXIT_INVALID


def cmd_decompose(args) -> int:
    tree, _ = formats.read_tree(_read_input(args.tree))
    coloring, tr = algorithm1(tree, args.policy, args.seed)
    if args.format == "dot":
        sys.stdout.write(formats.to_dot(tree, coloring, tr.depth_of))
        return EXIT_OK
    out = tr.to_json()
    if args.min_depth:
        out["D"] = min_depth(tree)
    _emit(out, args.format)
    return EXIT_OK


def _solve(kind: str, args) -> dict:
    text = _read_input(args.tree)
    if kind == "bounds":
        h, lower, upper, resolved = general_bounds(formats.read_graph(text), args.budget)
        return {"h": h, "lower": lower, "upper": upper, "resolved": resolved}
    tree, _ = formats.read_tree(text)
    if kind == "critical":
        return is_cfc_critical(tree, args.budget).to_json()
    solver = {"cfc": cfc_exact, "rank": rank_exact, "oc": oc_exact}[kind]
    return solver(tree, args.budget).to_json()


def cmd_exact(args) -> int:
    try:
        out = _solve(args.kind, args)
    except BudgetExceeded as exc:
        _emit({"error": "budget_exceeded", "lb": exc.lower, "ub": exc.upper, "nodes": exc.nodes}, args.format)
        return EXIT_BUDGET
    _emit(out, args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.family:
        jobs = family_jobs(args.family, range(args.k_min, args.k_max + 1), args.budget)
    else:
        jobs = random_jobs(args.count, args.n_min, args.n_max, args.seed, args.budget, args.max_n)
    records = write_report(run(jobs, args.workers), args.out)
    summary = summarize(records)
    print(json.dumps(summary))
    return EXIT_OK


def _add_tree_input(p) -> None:
    p.add_argument("tree", nargs="?", default="-", help="edge-list file (default: stdin)")


def _add_budget(p) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help=f"search node limit (default: $CFCLAB_BUDGET or {default_budget()})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cfclab", description="Conflict-free connection colorings of trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a family tree as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--certificate", nargs="?", const="-", default=None,
                   help="also write the construction coloring (to PATH, or after the tree)")
    p.add_argument("--canonical", action="store_true", help="sorted normalized edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a coloring; exit 2 with a witness if invalid")
    _add_tree_input(p)
    p.add_argument("--coloring", help="coloring file (default: lines after the tree)")
    p.add_argument("--mode", choices=sorted(_CHECKS), default="cfc")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="run balanced-edge decomposition")
    _add_tree_input(p)
    p.add_argument("--policy", choices=POLICIES, default=POLICIES[0])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--min-depth", action="store_true", help="also report the minimum depth D")
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("exact", help="exact solvers")
    p.add_argument("kind", choices=("cfc", "rank", "oc", "critical", "bounds"))
    _add_tree_input(p)
    _add_budget(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_exact)

    for kind in ("critical", "bounds"):
        p = sub.add_parser(kind, help=f"shorthand for 'exact {kind}'")
        _add_tree_input(p)
        _add_budget(p)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=cmd_exact, kind=kind)

    p = sub.add_parser("sweep", help="measure cfc and D over many trees (JSON lines)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=[f for f in FAMILIES if f not in ("random", "double_star")])
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--max-n", type=int, default=None, help="n limit for random sweeps (default: $CFCLAB_MAX_N or 14)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="JSON-lines report path")
    _add_budget(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (CfcError, OSError) as exc:
        print(f"cfclab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
