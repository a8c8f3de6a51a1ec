"""Command line entry point: scan, verify, emit-oracle, report."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .kummer.search import CUBE_TESTS
from .pipeline import (
    emit_oracle_script,
    format_report,
    read_fixtures,
    scan,
    scan_one,
    verify_fixture,
    write_fixtures,
)


def _cmd_scan(args) -> int:
    records = scan(args.d_from, args.d_to, args.a_max, args.b_max,
                   cube_test=args.cube_test, workers=args.jobs)
    text = write_fixtures(records, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    failing = []
    for rec in read_fixtures(args.fixtures):
        if rec.class_group is None:
            continue
        rep = verify_fixture(rec, cube_test=args.cube_test)
        print(rep.summary())
        if not rep.ok:
            failing.append(rec.d)
    if failing:
        print("failing d: " + " ".join(map(str, failing)), file=sys.stderr)
        return 1
    return 0


def _cmd_emit_oracle(args) -> int:
    rec = next((r for r in read_fixtures(args.fixtures) if r.d == args.d), None)
    if rec is None or rec.P is None:
        rec = scan_one(args.d, args.a_max, args.b_max, cube_test=args.cube_test, require_hypothesis=False)
    if rec is None:
        print(f"no Kummer candidate for d={args.d}", file=sys.stderr)
        return 1
    emit_oracle_script(rec, args.out)
    return 0


def _cmd_report(args) -> int:
    sys.stdout.write(format_report(read_fixtures(args.input)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummerclass")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def box(p):
        p.add_argument("--a-max", type=int, default=1000)
        p.add_argument("--b-max", type=int, default=100)
        p.add_argument("--cube-test", choices=CUBE_TESTS, default="legacy")

    p = sub.add_parser("scan", help="search d = 1 (mod 3) in a range")
    p.add_argument("--from", dest="d_from", type=int, required=True)
    p.add_argument("--to", dest="d_to", type=int, required=True)
    box(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="check fixture records against recomputed data")
    p.add_argument("--fixtures", type=Path, help="defaults to the bundled data")
    p.add_argument("--cube-test", choices=CUBE_TESTS, default="legacy")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("emit-oracle", help="write a GP script for the class group of K")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--fixtures", type=Path)
    box(p)
    p.set_defaults(func=_cmd_emit_oracle)

    p = sub.add_parser("report", help="print fixture records in table layout")
    p.add_argument("--in", dest="input", type=Path)
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
