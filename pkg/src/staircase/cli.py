"""Command-line interface: asm, schur, verify, report subcommands.

Exit codes: 0 on success, 1 when any verification case fails, 2 on usage
errors (argparse default).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import asmlab, harness
from .symfunc import Partition, schur_specialized


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=7, help="enumeration cap (default 7)")
    p.add_argument("--force", action="store_true", help="override size guards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="staircase", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_asm = sub.add_parser("asm", help="ASM enumeration and census tables")
    asm_sub = p_asm.add_subparsers(dest="asm_command", required=True)
    for name, help_text in (
        ("count", "number of n x n ASMs (enumerated and cross-checked)"),
        ("refined", "census by first-row and last-row +1 columns"),
        ("rowcol", "census by first-row +1 column and first-column +1 row"),
    ):
        sp = asm_sub.add_parser(name, help=help_text)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        _add_common(sp)

    p_schur = sub.add_parser("schur", help="Schur polynomial evaluation")
    schur_sub = p_schur.add_subparsers(dest="schur_command", required=True)
    sp = schur_sub.add_parser("eval", help="evaluate s_lambda at a point")
    sp.add_argument("--partition", required=True, help='comma-separated parts, e.g. "2,2,1,1,0,0"')
    sp.add_argument("--at", required=True, help='"ones" or comma-separated rationals, e.g. "1,2,3/2"')
    sp = schur_sub.add_parser("poly", help="print s_lambda as a polynomial")
    sp.add_argument("--partition", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=harness.SUITE_NAMES)
    _add_verify_flags(p_verify)

    p_report = sub.add_parser("report", help="run a suite and write a JSON report")
    p_report.add_argument("--suite", choices=harness.SUITE_NAMES, required=True)
    _add_verify_flags(p_report, json_required=True)

    return parser


def _add_verify_flags(p: argparse.ArgumentParser, json_required: bool = False) -> None:
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--lp", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--N", dest="N_big", type=int, default=None)
    p.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    p.add_argument("--json", dest="json_path", default=None, required=json_required, metavar="PATH")
    _add_common(p)


def _parse_point(text: str, length: int) -> list[Fraction]:
    if text.strip() == "ones":
        return [Fraction(1)] * length
    vals = [Fraction(t.strip()) for t in text.split(",")]
    if len(vals) != length:
        raise ValueError(f"partition has length {length} but {len(vals)} values given")
    return vals


def _cmd_asm(args: argparse.Namespace) -> int:
    if args.asm_command == "count":
        enumerated = sum(1 for _ in asmlab.enumerate_asms(args.n, args.cap, args.force))
        formula = asmlab.count_formula(args.n)
        if enumerated != formula:
            print(f"MISMATCH: enumerated {enumerated}, formula {formula}", file=sys.stderr)
            return 1
        print(enumerated)
        return 0
    table = (asmlab.refined_matrix if args.asm_command == "refined" else asmlab.refined_rowcol)(
        args.n, args.cap, args.force
    )
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    elif args.format == "json":
        print(table.to_json())
    else:
        for row in table.counts:
            print(" ".join(f"{c:>{len(str(max(max(r) for r in table.counts)))}}" for c in row))
    return 0


def _cmd_schur(args: argparse.Namespace) -> int:
    lam = Partition.parse(args.partition)
    if args.schur_command == "poly":
        from .symfunc import schur_bialternant

        print(schur_bialternant(lam, lam.length))
        return 0
    point = _parse_point(args.at, lam.length)
    value = schur_specialized(lam, point)
    print(value)
    return 0


def _options_from(args: argparse.Namespace) -> harness.Options:
    return harness.Options(
        n=args.n, l=args.l, lp=args.lp, m=args.m, N=args.N_big,
        seed=args.seed, cap=args.cap, force=args.force,
    )


def _emit_report(report: harness.SuiteReport, json_path: str | None) -> int:
    for case in report.cases:
        print(f"[{case.status:>10}] {case.id}  ({case.elapsed_ms} ms)  {case.detail}")
    s = report.summary
    print(f"suite={report.suite} seed={report.seed} total={s['total']} passed={s['passed']} failed={s['failed']}")
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(report.to_json() + "\n")
        print(f"wrote JSON report to {json_path}")
    return 0 if report.ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    report = harness.run_suite(args.suite, _options_from(args))
    return _emit_report(report, args.json_path)


def _cmd_report(args: argparse.Namespace) -> int:
    report = harness.run_suite(args.suite, _options_from(args))
    with open(args.json_path, "w") as fh:
        fh.write(report.to_json() + "\n")
    s = report.summary
    print(f"suite={report.suite} seed={report.seed} total={s['total']} passed={s['passed']} failed={s['failed']}")
    print(f"wrote JSON report to {args.json_path}")
    return 0 if report.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "asm":
            return _cmd_asm(args)
        if args.command == "schur":
            return _cmd_schur(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "report":
            return _cmd_report(args)
    except (ValueError, asmlab.CapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
