"""Command-line front end.

Examples::

    charclass normalize --d 3 --expr "e^2"
    charclass delta --d 2 --expr "e^3"
    charclass vanishes --dim-w 3 --expr "e^4" --json
    charclass kappa-table --max-i 6
    charclass table --d 4 --max-degree 8

Exit status: 0 on success, 1 for expression errors, 2 for invalid flags or
ring descriptors, 3 for internal invariant violations.
"""

from __future__ import annotations

import argparse
import io
import sys
import traceback
from contextlib import redirect_stdout
from typing import List, Optional, Sequence, Tuple

from . import serialize
from .errors import CharClassError, ExprSyntaxError, InvariantViolation
from .expr import parse_expr
from .gysin import pullback, pushforward
from .ring import GradedClass, RingSpec, make_ring
from .tabulate import enumerate_table, format_table, kappa_table
from .universal import UniversalClass, delta_star, vanishes_on_boundary

__all__ = ["run_command", "main", "build_parser"]

EXIT_OK, EXIT_PARSE, EXIT_SPEC, EXIT_BUG = 0, 1, 2, 3

COMMANDS = ("normalize", "push", "pull", "delta", "vanishes", "kappa-table", "table")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="fiber dimension d")
    common.add_argument("--flavor", choices=("SO", "O"), default="SO")
    common.add_argument("--coeff", choices=("Z", "Q", "F2"), default=None,
                        help="coefficient ring (default Z for SO, F2 for O)")
    common.add_argument("--torsion", choices=("paper", "standard"), default="standard",
                        help="'standard' imposes 2e = 0 for odd d (so e = 0 over Q); 'paper' only e^2 = 0")
    common.add_argument("--expr", help="class expression, e.g. 'p1^2*e + 3*p2'")
    common.add_argument("--dim-w", type=int, dest="dim_w", help="dimension of the bounding manifold W")
    common.add_argument("--max-degree", type=int, dest="max_degree", help="largest class degree to tabulate")
    common.add_argument("--max-i", type=int, dest="max_i", help="largest kappa index")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="charclass",
        description="Characteristic classes, Gysin maps and boundary vanishing of generalized MMM classes.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    helps = {
        "normalize": "normal form of a class on BSO(d) or BO(d)",
        "push": "Gysin pushforward from dimension d to d+1",
        "pull": "pullback from dimension d+1 to d",
        "delta": "delta* of the universal class of X",
        "vanishes": "does the universal class of X die on BDiff(W)?",
        "kappa-table": "delta* and verdicts for kappa_1 .. kappa_max-i",
        "table": "delta* and verdicts for all monomials up to a class degree",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _need(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.command} requires --{name.replace('_', '-')}")


def _ring(args, d: int) -> RingSpec:
    return make_ring(d, args.flavor, args.coeff, args.torsion)


def _emit_class(args, x: GradedClass) -> str:
    return serialize.dumps(serialize.class_to_json(x)) if args.json else str(x)


def _dispatch(args) -> str:
    cmd = args.command
    if cmd == "normalize":
        _need(args, "d", "expr")
        return _emit_class(args, parse_expr(_ring(args, args.d), args.expr))
    if cmd == "push":
        _need(args, "d", "expr")
        return _emit_class(args, pushforward(args.d, parse_expr(_ring(args, args.d), args.expr)))
    if cmd == "pull":
        _need(args, "d", "expr")
        return _emit_class(args, pullback(args.d, parse_expr(_ring(args, args.d + 1), args.expr)))
    if cmd == "delta":
        _need(args, "d", "expr")
        ring = _ring(args, args.d)
        value = delta_star(UniversalClass(ring, parse_expr(ring, args.expr)))
        return serialize.dumps(serialize.sigma_to_json(value)) if args.json else str(value)
    if cmd == "vanishes":
        _need(args, "dim_w", "expr")
        if args.dim_w < 1:
            raise UsageError("--dim-w must be at least 1")
        if args.d is not None and args.d != args.dim_w - 1:
            raise UsageError(f"--d {args.d} is not dim W - 1 = {args.dim_w - 1}")
        verdict = vanishes_on_boundary(args.dim_w, parse_expr(_ring(args, args.dim_w - 1), args.expr))
        return serialize.dumps(serialize.verdict_to_json(verdict)) if args.json else str(verdict)
    if cmd == "kappa-table":
        _need(args, "max_i")
        if args.flavor != "SO" or args.d not in (None, 2):
            raise UsageError("kappa classes are defined for oriented surfaces (d = 2)")
        rows = kappa_table(args.max_i, _ring(args, 2))
    else:
        _need(args, "d", "max_degree")
        rows = enumerate_table(_ring(args, args.d), args.max_degree)
    if args.json:
        return serialize.dumps([serialize.row_to_json(r) for r in rows])
    return format_table(rows)


def run_command(argv: Sequence[str]) -> Tuple[int, str]:
    """Run one invocation; returns ``(exit status, stdout text)``.  Diagnostics go to stderr."""
    parser = build_parser()
    out = io.StringIO()
    try:
        with redirect_stdout(out):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_SPEC), out.getvalue()
    try:
        text = _dispatch(args)
    except ExprSyntaxError as exc:
        print(f"charclass: parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_PARSE, ""
    except InvariantViolation as exc:
        print(f"charclass: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_BUG, ""
    except (UsageError, CharClassError) as exc:
        print(f"charclass: {exc}", file=sys.stderr)
        return EXIT_SPEC, ""
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return EXIT_BUG, ""
    return EXIT_OK, text + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
