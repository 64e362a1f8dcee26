"""Command-line driver: analyze one graph, sweep theorem checks over all
small graphs, emit symbolic-vs-ordinary witnesses, print Betti tables.

Exit codes: 0 success, 1 input error, 2 verification failure (a proven
statement failed, which means a bug), 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fields import GF, QQ, DEFAULT_PRIME
from . import bei, oracle
from .graphs import CapacityError, Graph, GraphParseError, parse_graph
from .idealops import ideal_power
from .reports import (SELECTORS, VerificationError, build_report,
                      run_enumeration, witness_certificate)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_CAPACITY = 3


def _read_graph(spec: str) -> Graph:
    if spec == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(spec) as fh:
            return parse_graph(fh.read())
    except OSError:
        return parse_graph(spec.replace(",", "\n"))


def _field(char: int):
    return QQ if char == 0 else GF(char)


def cmd_analyze(args) -> int:
    G = _read_graph(args.graph)
    report = build_report(G, k_max=args.k_max, with_betti=args.with_betti,
                          field=GF(args.field), seed=args.seed)
    if args.format == "json":
        print(report.to_json(include_timings=args.timings))
    elif args.format == "csv":
        flags = report.flags
        print("n,edges,closed,cm,dimension," + ",".join(
            f"depth_{k},reg_{k}" for k in sorted(report.powers)))
        cells = [str(report.n), str(len(G.edges)), str(flags["closed"]),
                 str(flags["cm"]), str(report.dimension)]
        for k in sorted(report.powers):
            row = report.powers[k]
            cells.append(str(row.get("oracle_depth", "")))
            cells.append(str(row.get("oracle_reg", "")))
        print(",".join(cells))
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    run = run_enumeration(args.selector, args.n_max,
                          budget_seconds=args.budget_seconds, jobs=args.jobs)
    if args.format == "json":
        print(run.to_json())
    else:
        print(f"selector {run.selector}: {run.graphs_seen} graphs "
              f"(n <= {run.n_max}), checked {run.evidence['checked']}, "
              f"skipped {run.evidence['skipped']}")
        if run.truncated:
            print("run truncated by budget")
        for ce in run.counterexamples:
            print(f"  counterexample: {ce}")
        if not run.counterexamples:
            print("  no counterexamples")
    if run.counterexamples and run.assertable:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_witness(args) -> int:
    G = _read_graph(args.graph)
    cert = witness_certificate(G, args.k)
    if cert is None:
        print("none")
        return EXIT_OK
    if args.format == "json":
        print(json.dumps(cert, sort_keys=True))
    else:
        print(f"induced net at {cert['embedding']}")
        print(f"witness (k={cert['k']}): {cert['witness']}")
        print(f"symbolic membership: {cert['symbolic_member']}; "
              f"ordinary membership: {cert['ordinary_member']}")
    return EXIT_OK


def cmd_betti(args) -> int:
    G = _read_graph(args.graph)
    J = bei.binomial_edge_ideal(G)
    Jk = ideal_power(J, args.k) if args.k > 1 else J
    table = oracle.betti_table(Jk, field=GF(args.field))
    if args.format == "json":
        print(json.dumps(table.to_json_dict(), sort_keys=True))
    else:
        print(table.format_triangle())
        print(f"pd {table.pd}  depth {table.depth}  reg {table.reg}  "
              f"(field GF({table.field_char}))")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="beipowers",
        description="Invariants of powers of binomial edge ideals: "
                    "combinatorial formulas with an exact symbolic oracle.")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    common.add_argument("--field", type=int, default=DEFAULT_PRIME,
                        help="prime for the oracle's homology ranks")
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("analyze", parents=[common],
                       help="full invariant report for one graph")
    p.add_argument("graph", help="edge list / graph6, a file, or '-'")
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--with-betti", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include timings in JSON output")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("enumerate", parents=[common],
                       help="verify one check over all small graphs")
    p.add_argument("selector", choices=sorted(SELECTORS))
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("witness", parents=[common],
                       help="net-based symbolic-vs-ordinary certificate")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("betti", parents=[common],
                       help="Betti table of a power of the edge ideal")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(fn=cmd_betti)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphParseError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
