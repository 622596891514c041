"""Command-line front end: gen, solve, check and verify-paper.

Exit codes: 0 success, 1 file or input error, 2 usage or expression error,
3 a solver ran out of budget (partial report still written), 4 a
verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .colorings import ColoringError, KINDS, classify
from .expressions import ExpressionError, parse_expression
from .formats import DimacsError, format_dimacs, read_coloring, read_dimacs, write_coloring, write_dimacs
from .graph import Family, FamilySpec, GraphError, generate
from .report import PARAMETERS, parameter_report
from .search import SearchLimits
from .verification import verify_paper

EXIT_OK, EXIT_FILE, EXIT_USAGE, EXIT_TIMEOUT, EXIT_FAILED = 0, 1, 2, 3, 4

# family name on the command line -> (family, names of its integer options)
FAMILIES = {
    "path": (Family.PATH, ("n",)),
    "cycle": (Family.CYCLE, ("n",)),
    "complete": (Family.COMPLETE, ("n",)),
    "kbip": (Family.COMPLETE_BIPARTITE, ("a", "b")),
    "kbip_mm": (Family.BIPARTITE_MINUS_MATCHING, ("n",)),
    "ttree": (Family.T_TREE, ("k",)),
    "pendant_path": (Family.PENDANT_PATH, ("epsilon",)),
    "caterpillar": (Family.CATERPILLAR_G6, ("epsilon",)),
}


class UsageError(Exception):
    pass


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def limits_from(args) -> SearchLimits:
    return SearchLimits(node_budget=args.node_budget, time_budget=args.time_budget)


def cmd_gen(args) -> int:
    if (args.family is None) == (args.expr is None):
        raise UsageError("give exactly one of --family or --expr")
    if args.expr is not None:
        g = parse_expression(args.expr)
    else:
        family, names = FAMILIES[args.family]
        values = [getattr(args, name) for name in names]
        missing = [f"--{name}" for name, v in zip(names, values) if v is None]
        if missing:
            raise UsageError(f"family {args.family} needs {', '.join(missing)}")
        g = generate(FamilySpec(family, tuple(values)))
    if args.out:
        write_dimacs(g, args.out)
    else:
        sys.stdout.write(format_dimacs(g))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = read_dimacs(args.graph)
    select = None
    if args.params:
        select = [p.strip() for p in args.params.split(",") if p.strip()]
        unknown = sorted(set(select) - set(PARAMETERS))
        if unknown:
            raise UsageError(f"unknown parameters {unknown}; choose from {', '.join(PARAMETERS)}")
    rep = parameter_report(g, limits_from(args), select)
    emit(dump_json(rep.to_json()), args.out)
    if args.witness_dir:
        folder = Path(args.witness_dir)
        folder.mkdir(parents=True, exist_ok=True)
        for name, c in rep.witnesses.items():
            write_coloring(c, folder / f"{name}.json")
    return EXIT_OK if rep.complete else EXIT_TIMEOUT


def cmd_check(args) -> int:
    g = read_dimacs(args.graph)
    c = read_coloring(args.coloring)
    if len(c.colors) != g.n:
        raise ColoringError(f"coloring has {len(c.colors)} entries but the graph has {g.n} vertices")
    cls = classify(g, c)
    if args.json:
        sys.stdout.write(dump_json(cls.to_json()))
    else:
        lines = [f"k={c.k}"] + [f"{kind}={str(getattr(cls, kind)).lower()}" for kind in KINDS]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.epsilon < 3:
        raise UsageError("--epsilon must be at least 3")
    rep = verify_paper(args.epsilon, args.time_budget, args.seed, args.tuples)
    emit(dump_json(rep.to_json()), args.out)
    if not rep.passed:
        return EXIT_FAILED
    return EXIT_TIMEOUT if rep.timed_out else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fallcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="write a generated graph as DIMACS")
    gen.add_argument("--family", choices=sorted(FAMILIES))
    gen.add_argument("--expr", help="expression such as 'join(cycle(4),prod(path(2),cycle(5)))'")
    for name in ("n", "a", "b", "k", "epsilon"):
        gen.add_argument(f"--{name}", type=int)
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="compute coloring parameters of a DIMACS graph")
    solve.add_argument("graph")
    solve.add_argument("--params", help=f"comma-separated subset of {','.join(PARAMETERS)}")
    solve.add_argument("--node-budget", type=int, default=0, help="per-search node cap (0 = none)")
    solve.add_argument("--time-budget", type=float, default=0.0, help="per-search seconds (0 = none)")
    solve.add_argument("--out", help="report file (default stdout)")
    solve.add_argument("--witness-dir", help="also write each witness as <param>.json here")
    solve.set_defaults(func=cmd_solve)

    check = sub.add_parser("check", help="classify a coloring of a DIMACS graph")
    check.add_argument("graph")
    check.add_argument("coloring")
    check.add_argument("--json", action="store_true", help="print the full classification as JSON")
    check.set_defaults(func=cmd_check)

    verify = sub.add_parser("verify-paper", help="reproduce every checkable claim")
    verify.add_argument("--epsilon", type=int, default=3)
    verify.add_argument("--time-budget", type=float, default=0.0, help="global seconds (0 = none)")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tuples", type=int, default=200, help="random join tuples to compose")
    verify.add_argument("--out", help="report file (default stdout)")
    verify.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ExpressionError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, DimacsError, ColoringError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
