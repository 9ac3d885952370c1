"""Command-line interface.

    regula classes <expr> [--p P] [--json]
    regula structure <expr>
    regula verify <suite> [--report out.json] [--csv]
    regula numtheory landau --r R --a A --p P
    regula numtheory scan-psl2 --bound B
    regula numtheory primes --kind K --bound B

The environment variable REGULA_ELEMENT_CAP overrides the enumeration
cap for one invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import perm_core
from .classes import class_counts, conjugacy_classes
from .errors import RegulaError
from .exprs import group_from_text
from .numtheory import landau_quantity, prime_family, psl2_candidate_scan
from .radicals import structure_summary
from .suites import SUITE_NAMES, run_suite


def _apply_cap_env():
    cap = os.environ.get("REGULA_ELEMENT_CAP")
    if cap:
        perm_core.ELEMENT_CAP = int(cap)


def _cmd_classes(args) -> int:
    G = group_from_text(args.expr)
    table = conjugacy_classes(G)
    doc = table.to_json_dict(descriptor=args.expr)
    if args.p is not None:
        counts = class_counts(G, args.p)
        doc["counts"] = {"p": counts.p, "k_total": counts.k_total,
                         "k_regular": counts.k_regular,
                         "k_singular": counts.k_singular}
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"{args.expr}: order {G.order}, {table.k_total} classes")
        for c in table.classes:
            print(f"  order {c.element_order:>4}  size {c.class_size:>8}  "
                  f"centralizer {c.centralizer_order:>8}  {c.representative}")
        if args.p is not None:
            print(f"  p = {args.p}: regular {doc['counts']['k_regular']}, "
                  f"singular {doc['counts']['k_singular']}")
    return 0


def _cmd_structure(args) -> int:
    G = group_from_text(args.expr)
    print(json.dumps(structure_summary(G), indent=2, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite)
    if args.csv:
        text = report.to_csv()
    else:
        text = report.to_json()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        summary = report.summary()
        print(f"{args.suite}: {summary} -> {args.report}")
    else:
        sys.stdout.write(text)
    return 2 if report.failed else 0


def _cmd_numtheory(args) -> int:
    if args.nt_command == "landau":
        value = landau_quantity(args.r, args.a, args.p)
        print(json.dumps({"r": args.r, "a": args.a, "p": args.p,
                          "value": str(value)}, sort_keys=True))
    elif args.nt_command == "scan-psl2":
        qs = psl2_candidate_scan(args.bound)
        print(json.dumps({"bound": args.bound, "candidates": qs}, sort_keys=True))
    elif args.nt_command == "primes":
        ps = prime_family(args.kind, args.bound)
        print(json.dumps({"kind": args.kind, "bound": args.bound,
                          "values": ps}, sort_keys=True))
    else:
        raise RegulaError(f"unknown numtheory subcommand {args.nt_command!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regula",
        description="Exact conjugacy-class statistics, structural subgroups "
                    "and claim-verification suites for desk-scale groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="conjugacy class table of a group expression")
    p.add_argument("expr")
    p.add_argument("--p", type=int, default=None, help="also report counts for this prime")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("structure", help="cores, radical, Fitting subgroup, derived length")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("verify", help="run a named claim suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--report", help="write the report to this path")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("numtheory", help="number-theoretic helpers")
    nts = p.add_subparsers(dest="nt_command", required=True)
    q = nts.add_parser("landau")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q = nts.add_parser("scan-psl2")
    q.add_argument("--bound", type=int, required=True)
    q = nts.add_parser("primes")
    q.add_argument("--kind", required=True,
                   choices=("fermat", "mersenne", "two_rn_plus1", "four_rn_plus1"))
    q.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_numtheory)
    return parser


def main(argv=None) -> int:
    _apply_cap_env()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RegulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
