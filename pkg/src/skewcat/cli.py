"""Command line interface.

    skewcat run --suite <name> [--action <name>] [--budget N] [--seed N]
                [--load file.json] [--out report.json] [--workers N]
    skewcat list

Exit codes: 0 all checks pass, 1 a law failed, 2 configuration or IO
error.
"""

from __future__ import annotations

import argparse
import sys

from .harness import (ACTIONS, SUITES, DegenerateProbe, SuiteConfig,
                      UnknownSuite, render_run, run_suite)
from .instances.actions import ParamOutOfBounds, UnknownAction


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skewcat",
        description="verify semidirect products of skew monoidal categories")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one or more check suites")
    run.add_argument("--suite", action="append", required=True,
                     help="suite name, or 'all' (repeatable)")
    run.add_argument("--action", default=None,
                     help="action instance for per-action suites")
    run.add_argument("--budget", type=int, default=10_000,
                     help="enumeration cap per law family")
    run.add_argument("--seed", type=int, default=0,
                     help="seed for sampled sweeps (recorded in the report)")
    run.add_argument("--max-order", type=int, default=3,
                     help="monoid order bound for the monoid oracle")
    run.add_argument("--chain-length", type=int, default=5,
                     help="stages in the colimit counterexample chain")
    run.add_argument("--load", default=None,
                     help="JSON input (category, gms, lattice or "
                          "monoid-action document)")
    run.add_argument("--out", default=None, help="write the JSON report here")
    run.add_argument("--workers", type=int, default=1,
                     help="concurrent suite workers")

    sub.add_parser("list", help="list suites and action instances")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        print("suites:")
        for name, (desc, _) in SUITES.items():
            print("  %-21s %s" % (name, desc))
        print("actions:")
        for name in ACTIONS:
            print("  %s" % name)
        return 0

    cfg = SuiteConfig(
        suites=tuple(args.suite), action=args.action, cap=args.budget,
        seed=args.seed, max_order=args.max_order,
        chain_length=args.chain_length, load=args.load, out=args.out,
        workers=args.workers)
    try:
        doc = run_suite(cfg)
    except (UnknownSuite, UnknownAction, ParamOutOfBounds,
            DegenerateProbe, OSError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = render_run(doc)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as e:
            print("error: %s" % e, file=sys.stderr)
            return 2
    for rep in doc["reports"]:
        mark = "ok  " if rep["status"] == "pass" else "FAIL"
        print("[%s] %s (%d laws, %d checked)" % (
            mark, rep["name"], rep["summary"]["laws"],
            rep["summary"]["checked"]))
    print("overall: %s" % doc["status"])
    return 0 if doc["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
