"""Command-line entry point: ``kmcds {solve,verify,exact,gen,bench}``.

Exit codes: 0 ok/valid, 1 invalid certificate (or a failed bench row),
2 parse error, 3 unsupported parameters (m < k), 4 infeasible graph.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .augment import solve
from .domination import verify_km_cds
from .errors import InfeasibleGraphError, ParseError, UnsupportedParametersError
from .fixtures import FIXTURES, fixture
from .generators import gen_random_k_connected, gen_unit_disk
from .graphio import emit_graph, emit_node_set, parse_graph, parse_node_set
from .oracle import exact_min_km_cds
from .report import bench_corpus, build_report, run_bench, summary_csv

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_INFEASIBLE = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    start = time.perf_counter()
    sol = solve(g, args.k, args.m)
    elapsed = time.perf_counter() - start
    report = build_report(Path(args.graph).stem, g, sol, elapsed, full_trace=args.trace)
    _write(args.output, emit_node_set(sol.c))
    payload = json.dumps(report.to_dict(), indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(payload)
    if args.trace:
        for level in report.trace["levels"]:
            print(
                "level {level}: +{nodes_added} nodes, {accepted} accepted, "
                "{adjusted} adjusted, {bootstrap} bootstrap".format(**level),
                file=sys.stderr,
            )
    return EXIT_OK if sol.certificate.is_valid else EXIT_INVALID


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    c = parse_node_set(_read(args.set))
    bad = [v for v in c if not 0 <= v < g.n]
    if bad:
        raise ParseError(f"vertex ids {sorted(bad)} out of range for n={g.n}")
    cert = verify_km_cds(g, c, args.k, args.m)
    print(json.dumps(cert.as_dict()))
    return EXIT_OK if cert.is_valid else EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    res = exact_min_km_cds(g, args.k, args.m, args.budget)
    print(json.dumps({
        "opt": res.opt_size,
        "optimum": None if res.optimum is None else sorted(res.optimum),
        "explored": res.explored,
        "timed_out": res.timed_out,
    }))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    comments: list[str] = []
    if args.family == "fixture":
        g = fixture(args.name)
        comments.append(f"fixture {args.name}")
    elif args.family == "random":
        g = gen_random_k_connected(args.n, args.k, args.p, args.seed)
        comments.append(f"random k-connected n={args.n} k={args.k} p={args.p} seed={args.seed}")
    else:
        g, points = gen_unit_disk(args.n, args.radius, args.seed)
        comments.append(f"unit disk n={args.n} radius={args.radius} seed={args.seed}")
        comments.extend(f"xy {v} {x!r} {y!r}" for v, (x, y) in enumerate(points))
    _write(args.output, emit_graph(g, comments))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    corpus = bench_corpus(
        args.trials,
        args.seed,
        n_range=(args.n_min, args.n_max),
        ks=tuple(args.k),
        m_extra=args.m_extra,
        family=args.family,
    )
    reports = run_bench(corpus, args.exact_max_n, args.budget, args.workers)
    if args.json:
        Path(args.json).write_text(json.dumps([r.to_dict() for r in reports], indent=1) + "\n")
    _write(args.csv, summary_csv(reports))
    failed = [(r.instance, p) for r in reports for p in r.problems()]
    for name, problem in failed:
        print(f"{name}: {problem}", file=sys.stderr)
    print(f"{len(reports)} instances, {len(failed)} problems", file=sys.stderr)
    return EXIT_INVALID if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kmcds", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a (k,m)-CDS")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="include every step in the report")
    p.add_argument("--report", help="write the JSON run report here")
    p.add_argument("-o", "--output", help="solution file (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set; exit 0 iff it is a (k,m)-CDS")
    p.add_argument("graph")
    p.add_argument("set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="brute-force minimum (k,m)-CDS")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**7, help="max subsets examined")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="emit a graph file")
    p.add_argument("family", choices=["random", "udg", "fixture"])
    p.add_argument("--name", choices=sorted(FIXTURES), default="K5")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--radius", type=float, default=0.35)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="solve a seeded corpus and tabulate the results")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--m-extra", type=int, default=2, help="m is drawn from k..k+m_extra")
    p.add_argument("--family", choices=["random", "udg", "mixed"], default="random")
    p.add_argument("--exact-max-n", type=int, default=0, help="run the exact oracle up to this n")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", help="write all run reports as a JSON array")
    p.add_argument("--csv", help="summary table (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedParametersError as exc:
        print(f"unsupported parameters: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InfeasibleGraphError as exc:
        print(f"infeasible graph: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
