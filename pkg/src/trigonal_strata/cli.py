"""``strata`` command line front end.

Exit codes: 0 success, 2 invalid input, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import report
from .checks import oracle_sweep
from .errors import ConsistencyError, StrataError, ValidationError
from .splitting import make_splitting_type
from .theory import TrigonalContext, classify

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def _parse_type(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--genus", "-g", type=int, required=True)
    p.add_argument("--maroni", "-n", type=int, required=True)
    p.add_argument(
        "--general",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="assume a general curve of this Maroni invariant (qualifies counts only)",
    )
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strata",
        description="Brill-Noether splitting loci of trigonal curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="classify every splitting locus in Pic^d")
    _add_curve_args(rep)
    rep.add_argument("--degree", "-d", type=int, required=True)
    rep.add_argument("--format", choices=("json", "text", "dot"), default="text")
    rep.add_argument("--include-empty", action="store_true")
    rep.add_argument("--min-dim", type=int)
    rep.add_argument("--max-dim", type=int)
    rep.add_argument("--spread-bound", type=int, help="max e3 - e1 to enumerate (default g + 2)")

    cls = sub.add_parser("classify", help="classify a single splitting type")
    _add_curve_args(cls)
    cls.add_argument("--type", "-t", dest="type_", type=_parse_type, required=True, metavar="A,B,C")
    cls.add_argument("--degree", "-d", type=int, help="defaults to a + b + c + g + 2")
    cls.add_argument("--format", choices=("json", "text"), default="text")

    orc = sub.add_parser("oracle-check", help="compare component counts with the subset oracle")
    orc.add_argument("--max-genus", type=int, default=20)
    orc.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_report(args: argparse.Namespace) -> int:
    ctx = TrigonalContext.of(args.genus, args.maroni, args.degree, args.general)
    full = report.stratify(ctx, args.spread_bound)
    report.check_consistency(full)
    strat = report.select(full, args.include_empty, args.min_dim, args.max_dim)
    if args.format == "json":
        text = report.emit_json(strat)
    elif args.format == "dot":
        text = report.emit_dot(report.build_diagram(strat))
    else:
        text = report.emit_text(strat)
    _write(text, args.out)
    return EXIT_OK


def run_classify(args: argparse.Namespace) -> int:
    e = make_splitting_type(args.type_)
    if e.rank != 3:
        raise ValidationError(f"a rank-3 splitting type is required, got {e}")
    degree = args.degree if args.degree is not None else e.total + args.genus + 2
    ctx = TrigonalContext.of(args.genus, args.maroni, degree, args.general)
    r = classify(ctx, e)
    if args.format == "json":
        text = json.dumps(report.stratum_to_dict(r), indent=2) + "\n"
    else:
        text = report.emit_text(report.Stratification(ctx, [r]))
    _write(text, args.out)
    return EXIT_OK


def run_oracle_check(args: argparse.Namespace) -> int:
    res = oracle_sweep(args.max_genus, inject_fault=args.inject_fault)
    print(f"flavor III cases: {res.cases}")
    print(f"checks passed:    {res.passed}")
    print(f"checks failed:    {len(res.failures)}")
    for msg in res.failures[:20]:
        print(f"  FAIL {msg}")
    return EXIT_OK if res.ok else EXIT_INCONSISTENT


COMMANDS = {"report": run_report, "classify": run_classify, "oracle-check": run_oracle_check}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"strata: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except StrataError as exc:
        print(f"strata: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
