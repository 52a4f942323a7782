"""Command-line entry point: ``superaudit verify | eval | bracket | list``.

Exit codes: 0 when every check passes, 1 when any check fails or reports a
discrepancy, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .algebra import AlgebraError, ConjugationMode
from .fields import bracket
from .parser import ParseError, parse_derivation, parse_expression
from .registry import NotFound, context, list_lines
from .suites import SUITE_NAMES, emit_report, run_suite

EXIT_OK, EXIT_CHECKS, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superaudit", description="Exact audits of supergroup identities.")
    p.add_argument("--version", action="version", version=f"superaudit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an audit suite")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES)
    v.add_argument("--conjugation", default=ConjugationMode.MULTIPLICATIVE.value, choices=[m.value for m in ConjugationMode])
    v.add_argument("--format", default="text", choices=("text", "json"))

    e = sub.add_parser("eval", help="parse and normalize an expression")
    e.add_argument("--context", help="registry context id; optional when the expression declares its generators")
    e.add_argument("expr")

    b = sub.add_parser("bracket", help="supercommutator of two derivations")
    b.add_argument("--context")
    b.add_argument("x")
    b.add_argument("y")

    sub.add_parser("list", help="list registry entries")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_suite(args.suite, args.conjugation)
            sys.stdout.write(emit_report(report, args.format))
            return EXIT_OK if report.ok else EXIT_CHECKS
        if args.command == "list":
            print("\n".join(list_lines()))
            return EXIT_OK
        ctx = context(args.context) if args.context else None
        if args.command == "eval":
            print(parse_expression(args.expr, ctx).render())
            return EXIT_OK
        X = parse_derivation(args.x, ctx)
        Y = parse_derivation(args.y, ctx)
        print(bracket(X, Y).render())
        return EXIT_OK
    except (ParseError, NotFound, AlgebraError) as exc:
        msg = exc.args[0] if isinstance(exc, NotFound) else str(exc)
        print(f"superaudit: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
