"""Command-line frontend.

Exit codes are shared by every subcommand: 0 success, 1 degenerate input or
other mathematical failure (including oracle mismatches), 2 usage, parse or
validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import grouplaw, report
from .cantor import cantor_add
from .curve import format_curve, load_curve, random_curve
from .errors import (CurveError, DegenerateError, HyperJacError, NotOnZ,
                     ParseError, RetriesExhausted, ShapeError)
from .field import PrimeField
from .mumford import (MumfordDivisor, format_divisor, is_on_Z, parse_divisor,
                      parse_uv, random_divisor)
from .poly import format_poly

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2

_INPUT_ERRORS = (ParseError, CurveError, ShapeError, NotOnZ, OSError, ValueError)


def _fmt_result(R) -> str:
    if isinstance(R, MumfordDivisor):
        return format_divisor(R)
    return f"subgeneric weight={R.weight} {R}"


def _degenerate_line(exc: Exception) -> str:
    if isinstance(exc, DegenerateError):
        return f"degenerate: {exc.tag} (stage {exc.stage}: {exc.detail})"
    return f"degenerate: {type(exc).__name__} ({exc})"


def cmd_add(args) -> int:
    curve = load_curve(args.curve)
    D1 = parse_divisor(curve, args.d1)
    D2 = parse_divisor(curve, args.d2)
    explicit = None
    failure = None
    if args.method in ("explicit", "both"):
        try:
            if args.retry_translation:
                explicit = grouplaw.add_translated(D1, D2, seed=args.seed)
            else:
                explicit = grouplaw.add(D1, D2)
        except (DegenerateError, RetriesExhausted) as exc:
            failure = exc
    if args.method == "explicit":
        if failure is not None:
            print(_degenerate_line(failure))
            return EXIT_MATH
        print(format_divisor(explicit))
        return EXIT_OK
    oracle = cantor_add(D1, D2)
    if args.method == "cantor":
        print(_fmt_result(oracle))
        return EXIT_OK
    print("explicit: " + (_degenerate_line(failure) if failure else format_divisor(explicit)))
    print("cantor:   " + _fmt_result(oracle))
    if failure is not None:
        print("verdict: EXPLICIT-DEGENERATE")
        return EXIT_MATH
    if explicit == oracle:
        print("verdict: AGREE")
        return EXIT_OK
    print("verdict: DISAGREE")
    return EXIT_MATH


def cmd_check(args) -> int:
    curve = load_curve(args.curve)
    u, v = parse_uv(curve, args.d)
    membership = is_on_Z(curve, u, v)
    if not membership.on_z:
        print("on-Z: false")
        return EXIT_MATH
    print("on-Z: true")
    print(f"w={format_poly(membership.w)}")
    return EXIT_OK


def cmd_neg(args) -> int:
    curve = load_curve(args.curve)
    print(format_divisor(grouplaw.negate(parse_divisor(curve, args.d))))
    return EXIT_OK


def cmd_double(args) -> int:
    curve = load_curve(args.curve)
    D = parse_divisor(curve, args.d)
    try:
        print(format_divisor(grouplaw.double(D, dummy_seed=args.seed)))
    except RetriesExhausted as exc:
        print(_degenerate_line(exc))
        return EXIT_MATH
    return EXIT_OK


def cmd_random(args) -> int:
    curve = load_curve(args.curve)
    print(format_divisor(random_divisor(curve, args.seed, require_nonzero_x=args.nonzero_x)))
    return EXIT_OK


def cmd_random_curve(args) -> int:
    curve = random_curve(PrimeField(args.modulus), args.genus, args.seed)
    sys.stdout.write(format_curve(curve))
    return EXIT_OK


def _write_json(path: str | None, doc: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def cmd_selftest(args) -> int:
    rep = report.selftest(args.genus_max, args.trials, args.seed, args.modulus)
    print(rep.to_text())
    _write_json(args.json, rep.to_json())
    return EXIT_OK if rep.mismatches == 0 else EXIT_MATH


def cmd_bench(args) -> int:
    result = report.bench(args.genus_max, args.trials, args.seed, args.modulus)
    print(report.bench_text(result))
    _write_json(args.json, result)
    return EXIT_OK if all(row["oracle-mismatch"] == 0 for row in result["rows"]) else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperjac",
        description="Explicit group law on hyperelliptic Jacobians in Mumford coordinates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_curve(p):
        p.add_argument("--curve", required=True, metavar="FILE")
        p.add_argument("--seed", type=int, default=0, metavar="N")
        return p

    p = with_curve(sub.add_parser("add", help="add two divisors"))
    p.add_argument("--d1", required=True, metavar="STR")
    p.add_argument("--d2", required=True, metavar="STR")
    p.add_argument("--method", choices=("explicit", "cantor", "both"), default="explicit")
    p.add_argument("--retry-translation", action="store_true",
                   help="retry on a translated curve when an x-coordinate is 0")
    p.set_defaults(func=cmd_add)

    p = with_curve(sub.add_parser("check", help="test membership in Z and print w"))
    p.add_argument("--d", required=True, metavar="STR")
    p.set_defaults(func=cmd_check)

    p = with_curve(sub.add_parser("neg", help="negate a divisor"))
    p.add_argument("--d", required=True, metavar="STR")
    p.set_defaults(func=cmd_neg)

    p = with_curve(sub.add_parser("double", help="double via a random dummy divisor"))
    p.add_argument("--d", required=True, metavar="STR")
    p.set_defaults(func=cmd_double)

    p = with_curve(sub.add_parser("random", help="seeded random divisor"))
    p.add_argument("--nonzero-x", action="store_true")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("random-curve", help="print a seeded random curve file")
    p.add_argument("--genus", type=int, required=True, metavar="G")
    p.add_argument("--modulus", type=int, default=10007, metavar="P")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.set_defaults(func=cmd_random_curve)

    for name, func, trials, helptext in (
            ("selftest", cmd_selftest, 200, "differential test against Cantor"),
            ("bench", cmd_bench, 100, "time explicit vs Cantor additions")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--genus-max", type=int, default=8, metavar="N")
        p.add_argument("--trials", type=int, default=trials, metavar="N")
        p.add_argument("--seed", type=int, default=0, metavar="N")
        p.add_argument("--modulus", type=int, default=10007, metavar="P")
        p.add_argument("--json", metavar="PATH")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateError, RetriesExhausted) as exc:
        print(_degenerate_line(exc))
        return EXIT_MATH
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperJacError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
