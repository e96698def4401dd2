"""Command-line interface: generate, solve, verify, bench."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .bench import build_grid, bench, summarize, write_csv
from .colorsolve import Coloring
from .core import GensortError, GroundTruth, ProbeOracle
from .generators import gen_er, gen_nuts_bolts, gen_stochastic
from .solvers import ALGOS, solve, verify


def _csv_list(kind):
    def parse(text: str):
        try:
            return [kind(x) for x in text.split(",") if x.strip()]
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    return parse


def cmd_generate(args: argparse.Namespace) -> int:
    if args.model == "er":
        g, oracle = gen_er(args.n, args.p, args.seed)
    elif args.model == "nutsbolts":
        g, oracle = gen_nuts_bolts(args.n, args.seed)
    else:
        g, oracle = gen_stochastic(args.n, args.p, args.seed)
    Path(args.out).write_text(io.dump_graph(g), encoding="utf-8")
    Path(args.order).write_text(io.dump_order(oracle.truth.order()), encoding="utf-8")
    print(f"n={g.n} m={g.m}")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    g = io.load_graph(Path(args.graph))
    order = io.load_order(Path(args.order), g.n)
    oracle = ProbeOracle(GroundTruth.from_order(g, order))
    coloring = None
    if args.coloring:
        coloring = Coloring.from_list(io.load_coloring(Path(args.coloring), g.n))
    outcome = solve(
        args.algo, oracle, g,
        k=args.k, coloring=coloring, p_hint=args.p, threshold_scale=args.threshold_scale,
    )
    Path(args.out).write_text(io.dump_orientation(outcome.store.directed_edges()), encoding="utf-8")
    print(f"probes={oracle.probe_count}")
    extra = f" k_used={outcome.k_used}" if outcome.k_used is not None else ""
    print(f"algo={outcome.algo} branch={outcome.branch}{extra}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = io.load_graph(Path(args.graph))
    order = io.load_order(Path(args.order), g.n)
    oriented = io.load_orientation(Path(args.dag))
    report = verify(g, order, oriented)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def cmd_bench(args: argparse.Namespace) -> int:
    grid = build_grid(args.model, args.n_list, args.p_list, args.trials, args.algo, args.seed)
    records = []

    def collect():
        for rec in bench(grid, jobs=args.jobs):
            records.append(rec)
            yield rec

    if args.csv == "-":
        write_csv(collect(), sys.stdout)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(collect(), fh)
    for line in summarize(records):
        print(line, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gensort", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a random instance and its hidden order")
    gen.add_argument("--model", choices=("er", "nutsbolts", "stochastic"), required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True)
    gen.add_argument("--order", required=True)
    gen.set_defaults(func=cmd_generate)

    sol = sub.add_parser("solve", help="recover the orientation, counting probes")
    sol.add_argument("--algo", choices=ALGOS, required=True)
    sol.add_argument("--graph", required=True)
    sol.add_argument("--order", required=True)
    sol.add_argument("--k", type=int)
    sol.add_argument("--coloring")
    sol.add_argument("--p", type=float, help="edge probability hint for hybrid")
    sol.add_argument("--threshold-scale", type=float, default=1.0)
    sol.add_argument("--out", required=True)
    sol.set_defaults(func=cmd_solve)

    ver = sub.add_parser("verify", help="check an orientation file against the hidden order")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--order", required=True)
    ver.add_argument("--dag", required=True)
    ver.set_defaults(func=cmd_verify)

    ben = sub.add_parser("bench", help="probe-count sweep to CSV")
    ben.add_argument("--model", choices=("er", "nutsbolts", "stochastic"), default="er")
    ben.add_argument("--n-list", type=_csv_list(int), required=True)
    ben.add_argument("--p-list", type=_csv_list(float), default=[0.5])
    ben.add_argument("--trials", type=int, default=10)
    ben.add_argument("--algo", type=_csv_list(str), default=["cliquesolve"])
    ben.add_argument("--seed", type=int, default=0, help="seed of the first trial")
    ben.add_argument("--jobs", type=int, default=1)
    ben.add_argument("--csv", required=True, help="output path, or - for stdout")
    ben.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.command == "bench":
        bad = [a for a in args.algo if a not in ALGOS]
        if bad:
            parser.error(f"unknown algorithm(s): {', '.join(bad)}")
    try:
        return args.func(args)
    except (GensortError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
