"""Command-line front end.

Commands:
    eval "<expr>"            evaluate to canonical form
    cmp "<e1>" "<e2>"        print <, =, or >
    dist "<x>" "<y>" "<z>"   explain whether x distributes over y + z
    axioms [--trials N] [--seed S] [--property ID] [--profile NAME]
                             run the conformance suite
    repl                     one expression per line; :quit ends

Exit codes: 0 success, 1 evaluation error, 2 parse error,
3 conformance failures detected by ``axioms``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .conformance import PROFILES, render_report, run_all, run_property
from .conformance.runner import UnknownPropertyError
from .evaluator import eval_expr
from .external import NotZerolessError, en_compare
from .fmt import print_canonical
from .laws import dist_decide
from .parser import ParseError, parse_expr

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_PARSE = 2
EXIT_CONFORMANCE = 3


def _evaluate(text: str):
    return eval_expr(parse_expr(text))


def _cmd_eval(args) -> int:
    print(print_canonical(_evaluate(args.expr)))
    return EXIT_OK


def _cmd_cmp(args) -> int:
    c = en_compare(_evaluate(args.left), _evaluate(args.right))
    print("<" if c < 0 else ("=" if c == 0 else ">"))
    return EXIT_OK


def _cmd_dist(args) -> int:
    report = dist_decide(_evaluate(args.x), _evaluate(args.y), _evaluate(args.z))
    print(f"distributive: {'yes' if report.holds else 'no'}")
    print(f"branch: {report.branch.value}")
    print(f"x*(y+z) = {print_canonical(report.lhs)}")
    print(f"x*y + x*z = {print_canonical(report.rhs)}")
    print(f"correction = {print_canonical(report.correction)}")
    return EXIT_OK


def _cmd_axioms(args) -> int:
    profile = PROFILES[args.profile]
    if args.property is not None:
        try:
            reports = [run_property(args.property, args.trials, args.seed, profile)]
        except UnknownPropertyError:
            print(f"error: unknown property {args.property!r}", file=sys.stderr)
            return EXIT_EVAL
    else:
        reports = run_all(args.trials, args.seed, profile)
    for r in reports:
        print(render_report(r))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CONFORMANCE


def _cmd_repl(args) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            break
        try:
            print(print_canonical(_evaluate(line)))
        except ParseError as exc:
            print(f"parse error: {exc}")
        except (NotZerolessError, ZeroDivisionError, ValueError) as exc:
            print(f"error: {exc}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extnum",
        description="exact arithmetic on external numbers (value + order of magnitude)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to canonical form")
    p_eval.add_argument("expr")
    p_eval.set_defaults(fn=_cmd_eval)

    p_cmp = sub.add_parser("cmp", help="compare two expressions")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    p_cmp.set_defaults(fn=_cmd_cmp)

    p_dist = sub.add_parser("dist", help="explain distributivity for x, y, z")
    p_dist.add_argument("x")
    p_dist.add_argument("y")
    p_dist.add_argument("z")
    p_dist.set_defaults(fn=_cmd_dist)

    p_ax = sub.add_parser("axioms", help="run the conformance suite")
    p_ax.add_argument("--trials", type=int, default=10000)
    p_ax.add_argument("--seed", type=int, default=0)
    p_ax.add_argument("--property", default=None, metavar="ID")
    p_ax.add_argument(
        "--profile", choices=sorted(PROFILES), default="default",
        help="generator profile (default: default)",
    )
    p_ax.set_defaults(fn=_cmd_axioms)

    p_repl = sub.add_parser("repl", help="read expressions from stdin")
    p_repl.set_defaults(fn=_cmd_repl)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotZerolessError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
