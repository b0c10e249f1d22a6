"""Command-line interface.

Subcommands: construct, verify, exact, bounds.  Exit codes: 0 success/valid,
1 invalid decomposition, 2 parse error, 3 bad arguments, 4 budget exhausted.
With ``--porcelain`` reports are emitted as ``key=value`` lines (keys:
pieces, valid, f_exact, threshold_d, coefficient_num, coefficient_den).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import bounds as bounds_mod
from .constructions import (
    construct_baseline,
    construct_even_from_odd,
    construct_stars,
    construct_theorem1_detailed,
)
from .core import Decomposition
from .exact import SearchBudget, solve_exact
from .fileio import ParseError, parse_decomposition, serialize_decomposition
from .verifier import verify_decomposition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BAD_ARGS = 3
EXIT_BUDGET = 4


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _write_decomposition(d: Decomposition, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_decomposition(d))


def cmd_construct(args: argparse.Namespace) -> int:
    n, r = args.n, args.r
    try:
        if args.method == "stars":
            if r is not None and r != 2:
                return _fail("stars implies r=2", EXIT_BAD_ARGS)
            dec = construct_stars(n)
            tally = None
        elif args.method == "baseline":
            if r is None:
                return _fail("baseline requires --r", EXIT_BAD_ARGS)
            dec = construct_baseline(n, r)
            tally = None
        elif args.method == "theorem1":
            if r is None or args.k is None:
                return _fail("theorem1 requires --r and --k", EXIT_BAD_ARGS)
            if r % 2 == 0:
                return _fail("theorem1 requires odd r", EXIT_BAD_ARGS)
            dec, tally = construct_theorem1_detailed(n, args.k, r)
        elif args.method == "even-from-odd":
            if r is None:
                return _fail("even-from-odd requires --r", EXIT_BAD_ARGS)
            if r % 2 == 1:
                return _fail("even-from-odd requires even r", EXIT_BAD_ARGS)
            dec = construct_even_from_odd(n, r)
            tally = None
        else:  # pragma: no cover - argparse restricts choices
            return _fail(f"unknown method {args.method}", EXIT_BAD_ARGS)
    except ValueError as exc:
        return _fail(str(exc), EXIT_BAD_ARGS)

    _write_decomposition(dec, args.out)
    if args.porcelain:
        print(f"pieces={dec.piece_count}")
    else:
        print(f"wrote {args.out}: {dec.piece_count} pieces on "
              f"{dec.ground.n} vertices, r={dec.ground.r}")
        if tally is not None:
            print(f"  paired-2s family:  {tally.paired_two_classes}")
            print(f"  2s-plus-3 family:  {tally.two_plus_three}")
            print(f"  generic family:    {tally.generic}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            dec = parse_decomposition(fh.read())
    except OSError as exc:
        return _fail(str(exc), EXIT_PARSE)
    except ParseError as exc:
        return _fail(f"parse error: {exc}", EXIT_PARSE)
    report = verify_decomposition(dec)
    if args.porcelain:
        print(f"pieces={report.piece_count}")
        print(f"valid={'1' if report.valid else '0'}")
    elif report.valid:
        print(f"VALID: {report.piece_count} pieces, {report.edge_count} edges")
    else:
        print(f"INVALID: {report.message}")
        if report.witness is not None:
            print(f"  witness edge {report.witness} covered "
                  f"{report.witness_multiplicity} times by pieces {list(report.witness_pieces)}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    budget = SearchBudget(
        max_nodes=args.max_nodes,
        wall_clock_s=args.max_seconds,
    )
    try:
        result = solve_exact(args.n, args.r, budget, allow_large=args.allow_large)
    except ValueError as exc:
        return _fail(str(exc), EXIT_BAD_ARGS)
    if args.out:
        _write_decomposition(result.witness, args.out)
    if args.porcelain:
        if result.optimal:
            print(f"f_exact={result.value}")
        print(f"pieces={result.witness.piece_count}")
    elif result.optimal:
        print(f"f_{args.r}({args.n}) = {result.value}  ({result.nodes} nodes)")
    else:
        print(f"budget exhausted after {result.nodes} nodes; "
              f"best interval [{result.lower_bound}, {result.value}]")
    return EXIT_OK if result.optimal else EXIT_BUDGET


def _print_report(rep: bounds_mod.BoundReport, porcelain: bool) -> None:
    coef = rep.theorem1_coefficient
    if porcelain:
        print(f"coefficient_num={coef.numerator}")
        print(f"coefficient_den={coef.denominator}")
        return
    rows = [
        ("d", rep.d),
        ("r", rep.r),
        ("k", rep.k),
        ("coefficient", f"{coef} ~= {float(coef):.6f}"),
        ("coefficient < 1", "yes" if rep.coefficient_below_one else "no"),
        ("C'", rep.c_prime),
        ("epsilon_k = d!*C'/k", rep.epsilon_k),
        ("alon lower coefficient", rep.alon_lower_coefficient),
        ("decay bound (r/2)(14/15)^(r/4)",
         rep.corollary2_exact if rep.corollary2_exact is not None else rep.corollary2_value),
        ("decay bound precision (digits)", rep.precision_digits),
    ]
    width = max(len(str(name)) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {value}")


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.scan_range:
        try:
            lo, hi = (int(x) for x in args.scan_range.split(":"))
        except ValueError:
            return _fail("scan-range must look like 140:160", EXIT_BAD_ARGS)
        td = bounds_mod.threshold_d()
        for d in range(lo, hi + 1):
            coef = bounds_mod.base_coefficient(d)
            marker = "  <-- threshold" if d == td else ""
            print(f"d={d:<5} coefficient ~= {float(coef):.9f} "
                  f"{'< 1' if coef < 1 else '>= 1'}{marker}")
        print(f"threshold d = {td}, uniformity r = {2 * td + 1}")
        if args.porcelain:
            print(f"threshold_d={td}")
        return EXIT_OK
    if args.d is None and args.r is None:
        return _fail("give --d or --r (or --scan-range)", EXIT_BAD_ARGS)
    if args.d is not None and args.r is not None and args.r != 2 * args.d + 1:
        return _fail("inconsistent --d and --r (need r = 2d+1)", EXIT_BAD_ARGS)
    if args.d is not None:
        d = args.d
    else:
        if args.r % 2 == 0 or args.r < 3:
            return _fail("--r must be odd and >= 3 (or give --d)", EXIT_BAD_ARGS)
        d = (args.r - 1) // 2
    try:
        rep = bounds_mod.theorem1_coefficient(d, args.k)
    except ValueError as exc:
        return _fail(str(exc), EXIT_BAD_ARGS)
    _print_report(rep, args.porcelain)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpdecomp",
        description="Construct, verify, and bound partitions of complete "
        "r-uniform hypergraphs into complete r-partite r-graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a decomposition and write it to a file")
    p.add_argument("--method", required=True,
                   choices=["stars", "baseline", "theorem1", "even-from-odd"])
    p.add_argument("--n", type=int, required=True,
                   help="vertex count (class size for theorem1)")
    p.add_argument("--r", type=int, default=None, help="uniformity")
    p.add_argument("--k", type=int, default=None, help="class count (theorem1)")
    p.add_argument("--out", required=True, help="output decomposition file")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a decomposition file exhaustively")
    p.add_argument("path")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact minimum piece count on a tiny instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=50_000_000)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--allow-large", action="store_true",
                   help="override the candidate enumeration soft cap")
    p.add_argument("--out", default=None, help="write the witness here")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="evaluate the bound formulas")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--scan-range", default=None, metavar="LO:HI",
                   help="print the coefficient over a range of d and the threshold")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
