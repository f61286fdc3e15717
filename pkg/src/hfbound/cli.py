"""``hfbound`` command-line front end.

Exit codes: 0 ok (diffs empty or whitelisted), 2 diffs beyond the whitelist,
3 invariant failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import kernels
from .codes import dump_code, greedy_construct, read_code, verify_code
from .core import parse_word
from .errors import BudgetExceeded, HfError
from .reports import (
    ReportBundle,
    cmd_bounds,
    cmd_classify,
    cmd_curves,
    cmd_profile,
    cmd_table1,
    cmd_table2,
    cmd_verify,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_DIFF = 2
EXIT_INVARIANT = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, fmt_default: str = "text") -> None:
    p.add_argument("--format", choices=("text", "csv", "json"), default=fmt_default)
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--budget", type=int, help="enumeration budget (words); overrides HFBOUND_BUDGET")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfbound", description="Bounds and sphere sizes for homopolymer-free codes.")
    parser.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("table1", help="bounds grid for q=4 with diff against the reference table")
    p.add_argument("--n", type=int, default=8, help="largest n")
    p.add_argument("--d", type=int, default=5, help="largest d")
    _common(p)

    p = sub.add_parser("table2", help="shell profiles of the pattern words")
    p.add_argument("--n", type=int, default=10, help="largest n")
    p.add_argument("--q", type=int, default=4)
    _common(p)

    p = sub.add_parser("classify", help="group C_{q,n} by shell profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=4)
    _common(p)

    p = sub.add_parser("curves", help="rate curves as CSV")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--n", type=int, default=500, help="largest n")
    _common(p, "csv")

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITES + ("greedy", "all"), default="all")
    p.add_argument("--seed", type=int, default=0)
    _common(p)

    p = sub.add_parser("profile", help="shell sizes around one center")
    p.add_argument("word", help="digits, ACGT for q=4, or comma-separated symbols")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--radius", type=int, help="only report shells up to this radius")
    _common(p, "csv")

    p = sub.add_parser("bounds", help="all parameter-only bounds at one point")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _common(p)

    p = sub.add_parser("greedy", help="greedy code in the code-file format")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, help="shuffle the scan order with this seed")
    p.add_argument("--dna", action="store_true", help="write words over ACGT (q=4)")
    p.add_argument("--out", type=Path)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("check-code", help="verify a code file against a claimed minimum distance")
    p.add_argument("path", type=Path)
    p.add_argument("--d", type=int, required=True)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _run(args) -> int:
    if args.command == "greedy":
        code = greedy_construct(
            args.q, args.n, args.d,
            order="lexicographic" if args.seed is None else "seeded-shuffle",
            seed=args.seed or 0, budget=args.budget,
        )
        _emit(dump_code(code, dna=args.dna), args.out)
        return EXIT_OK
    if args.command == "check-code":
        code = read_code(args.path)
        words = [w.symbols for w in code]
        rep = verify_code(words, code.n, len(words), args.d, code.q)
        print(rep.summary())
        return EXIT_OK if rep.accepted else EXIT_INVARIANT

    bundle: ReportBundle
    if args.command == "table1":
        bundle = cmd_table1(args.n, args.d, args.budget)
    elif args.command == "table2":
        bundle = cmd_table2(args.n, args.q)
    elif args.command == "classify":
        bundle = cmd_classify(args.n, args.q, args.budget)
    elif args.command == "curves":
        bundle = cmd_curves(args.q, args.d, args.n, budget=args.budget)
    elif args.command == "verify":
        bundle = cmd_verify(args.suite, args.budget, args.seed)
    elif args.command == "profile":
        bundle = cmd_profile(parse_word(args.word, args.q))
        if args.radius is not None:
            bundle.rows = [r for r in bundle.rows if r["r"] <= args.radius]
    elif args.command == "bounds":
        bundle = cmd_bounds(args.q, args.n, args.d, args.budget)
    else:  # pragma: no cover
        raise UsageError(f"unknown command {args.command}")
    _emit(bundle.render(args.format), args.out)
    return bundle.exit_code()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors 64
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.backend:
        print(kernels.BACKEND)
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except BudgetExceeded as exc:
        print(f"hfbound: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HfError, UsageError) as exc:
        print(f"hfbound: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
