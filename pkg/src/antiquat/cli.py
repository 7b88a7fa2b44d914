"""Command-line front end.

Subcommands: ``eval`` (expression evaluation), ``table`` (table synthesis and
printing), ``verify`` (identity checks with randomized trials), ``surface``
(quadric classification and mesh export).  Exit codes are stable: 0 success,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import core, verify
from .core import Algebra
from .doubling import Seed2, double_anticommutative, seed_complex, seed_double_numbers
from .expr import EvalError, LexError, ParseError, evaluate
from .geometry import classification_line, classify_surface, sample_surface, write_surface_csv
from .tableio import TableParseError, format_table_text, parse_table_text

__all__ = ["main", "resolve_algebra"]

_DOUBLING_SPEC_RE = re.compile(r"^(?:(?P<name>[A-Za-z]\w*)=)?D\((?P<a>[CW])\s*,\s*(?P<b>[CW])\)$")

_BUILTIN_ALGEBRAS = {
    "C": core.complex_numbers,
    "W": core.double_numbers,
    "H": core.quaternions,
    "AH": core.antiquaternions,
}

_SEEDS = {"C": seed_complex, "W": seed_double_numbers}


def resolve_algebra(spec: str) -> Algebra:
    """Turn a spec string into an algebra.

    Accepts a builtin name (C, W, H, AH), a doubling spec like ``AH=D(C,W)``
    or ``D(W,W)`` (seeds C and W), or a path to a table file.
    """
    if spec in _BUILTIN_ALGEBRAS:
        return _BUILTIN_ALGEBRAS[spec]()
    m = _DOUBLING_SPEC_RE.match(spec)
    if m:
        a: Seed2 = _SEEDS[m.group("a")]()
        b: Seed2 = _SEEDS[m.group("b")]()
        return double_anticommutative(a, b, m.group("name") or spec)
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(
            f"{spec!r} is not a builtin name, a doubling spec like AH=D(C,W), "
            f"or a readable table file ({exc})"
        ) from exc
    return Algebra(spec, parse_table_text(text))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _print_source_error(src: str, exc: Exception) -> None:
    offset = getattr(exc, "offset", None)
    sys.stderr.write(f"error: {exc}\n")
    if offset is not None:
        shown = src.rstrip("\n")
        sys.stderr.write(f"  {shown}\n")
        sys.stderr.write("  " + " " * min(offset, len(shown)) + "^\n")


def _cmd_eval(args: argparse.Namespace) -> int:
    src = sys.stdin.read() if args.expression == "-" else args.expression
    try:
        result = evaluate(src)
    except (LexError, ParseError, EvalError) as exc:
        _print_source_error(src, exc)
        return 2
    print(result)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    try:
        algebra = resolve_algebra(args.spec)
    except (TableParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(format_table_text(algebra.table))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        algebra = resolve_algebra(args.target)
    except (TableParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    eps = args.eps if args.eps is not None else 1e-9
    results = verify.run_suite(algebra, trials=args.trials, seed=args.seed, eps=eps)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name:<32} {r.detail}")
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed for {algebra.name} "
          f"(trials={args.trials}, seed={args.seed})")
    return 0 if passed == len(results) else 1


def _cmd_surface(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.out and args.out_flag:
        parser.error("output path given both positionally and with --out")
    out_path = args.out or args.out_flag
    surface = classify_surface(args.a1, args.p, eps=args.eps)
    if out_path:
        points = sample_surface(surface)
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                write_surface_csv(points, fh)
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {out_path!r}: {exc}\n")
            return 2
    print(classification_line(surface))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiquat",
        description="Antiquaternion (split-quaternion) arithmetic, table synthesis "
                    "by anticommutative doubling, identity verification and "
                    "pseudonorm level-set export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eval_p = sub.add_parser("eval", help="evaluate an expression; '-' reads stdin")
    eval_p.add_argument("expression", help="e.g. '(1 + 2*e2) * ~(e3 - e4)'")

    table_p = sub.add_parser("table", help="print a multiplication table")
    table_p.add_argument("spec", help="builtin name (C, W, H, AH), doubling spec "
                                      "like AH=D(C,W), or a table file path")

    verify_p = sub.add_parser("verify", help="check the algebraic identities")
    verify_p.add_argument("target", help="algebra spec as for 'table'")
    verify_p.add_argument("--trials", type=_positive_int, default=verify.DEFAULT_TRIALS,
                          help="randomized trials per check (default %(default)s)")
    verify_p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED,
                          help="RNG seed (default %(default)s)")
    verify_p.add_argument("--eps", type=_positive_float, default=None,
                          help="tolerance override for zero-divisor and "
                               "invertibility cutoffs (default 1e-9)")

    surface_p = sub.add_parser("surface", help="classify a pseudonorm level set "
                                               "and optionally export its mesh")
    surface_p.add_argument("a1", type=float, help="fixed scalar part")
    surface_p.add_argument("p", type=float, help="pseudonorm value")
    surface_p.add_argument("out", nargs="?", default=None, help="CSV output path")
    surface_p.add_argument("--out", dest="out_flag", default=None, metavar="PATH",
                           help="CSV output path (alternative to the positional)")
    surface_p.add_argument("--eps", type=_positive_float, default=None,
                           help="cone classification band (default scales with inputs)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_surface(args, parser)


if __name__ == "__main__":
    sys.exit(main())
