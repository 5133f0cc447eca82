"""Command-line front end: compute, enumerate, verify, table, oracle.

Results go to stdout, logs to stderr.  Exit codes: 0 success, 2 invalid
input, 3 size cap exceeded, 4 disagreement between independent methods or a
failed identity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from itertools import islice

from .core import Division, InvalidComposition, InvalidDivision, NotAdmissible, make_division, parse_composition
from .counting import all_compositions, mixed_eulerian
from .identities import FAIL, SUITES, run_suite
from .oracle import OracleCapExceeded, OracleError, oracle_mixed_eulerian, volume_poly
from .permutations import (
    ResourceLimitExceeded,
    deletion_chain,
    enumerate_c_permutations,
    format_permutation,
    iter_c_permutations,
)

log = logging.getLogger("mixed_eulerian")

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_DISAGREE = 0, 2, 3, 4

ENUMERATION_CAP = 8
ORACLE_CAP = 8
TABLE_CAP = 12
VERIFY_CAP = 7


class CapExceeded(Exception):
    pass


def _check_cap(n: int, cap: int, what: str, override: int | None):
    limit = override if override is not None else cap
    if n > limit:
        raise CapExceeded(f"{what} is capped at n <= {limit} (got n = {n}); raise it with --max-n")


def _composition_arg(text: str):
    try:
        return parse_composition(text)
    except InvalidComposition as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _division_arg(text: str) -> Division:
    try:
        return Division.parse(text)
    except InvalidDivision as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rationals_arg(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational vector {text!r}")


def _add_common(p: argparse.ArgumentParser, with_type: bool = True):
    if with_type:
        p.add_argument("--type", dest="kind", choices=["A", "B"], default="A", type=str.upper)
    p.add_argument("--max-n", type=int, default=None, help="override the size cap for this command")


def cmd_compute(args) -> int:
    c = args.c
    n = len(c)
    methods = ["recursion", "enumeration", "oracle"] if args.method == "all" else [args.method]
    values = {}
    for method in methods:
        if method == "recursion":
            _check_cap(n, TABLE_CAP, "recursion", args.max_n)
            values[method] = mixed_eulerian(c, args.kind)
        elif method == "enumeration":
            _check_cap(n, ENUMERATION_CAP, "enumeration", args.max_n)
            perms = enumerate_c_permutations(make_division(c), args.kind)
            values[method] = len(perms) * (2**n if args.kind == "B" else 1)
        else:
            _check_cap(n, ORACLE_CAP, "oracle", args.max_n)
            values[method] = oracle_mixed_eulerian(c, args.kind, cap=max(n, ORACLE_CAP))
    agree = len(set(values.values())) == 1
    if args.json:
        out = {"type": args.kind, "c": list(c), "values": {k: str(v) for k, v in values.items()}}
        if len(values) > 1:
            out["agree"] = agree
        print(json.dumps(out))
    elif len(values) == 1:
        print(next(iter(values.values())))
    else:
        print(",".join(str(values[m]) for m in methods), "agree" if agree else "disagree")
    if not agree:
        log.error("methods disagree for %s: %s", c, values)
        return EXIT_DISAGREE
    return EXIT_OK


def _trace_lines(d: Division, w, kind: str) -> list[str]:
    """One line per step, the deleted element in brackets."""
    lines = []
    for s, (before, _) in zip(w, deletion_chain(d, w, kind)):
        cells = [",".join(f"[{t}]" if t == s else str(t) for t in block) or "-" for block in before.blocks]
        lines.append("  " + "|".join(cells))
    return lines


def cmd_enumerate(args) -> int:
    d = args.division if args.division is not None else make_division(args.c)
    _check_cap(len(d), ENUMERATION_CAP, "enumeration", args.max_n)
    if args.limit is not None:
        if args.limit < 0:
            raise ValueError("--limit must be non-negative")
        perms = list(islice(iter_c_permutations(d, args.kind), args.limit))
    else:
        perms = enumerate_c_permutations(d, args.kind)
    for w in perms:
        print(format_permutation(w))
        if args.trace:
            print("\n".join(_trace_lines(d, w, args.kind)))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_cap(args.n, VERIFY_CAP, "verification", args.max_n)
    reports = run_suite(args.n, args.suite)
    records = [r.to_dict(timing=args.timing) for r in reports]
    print(json.dumps(records, indent=2))
    if args.figure:
        from .plotting import plot_report

        log.info("wrote %s", plot_report(records, args.figure))
    failed = [r.identity for r in reports if r.status == FAIL]
    if failed:
        log.error("failed: %s", ", ".join(failed))
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_table(args) -> int:
    n = args.n
    if n < 1:
        raise InvalidComposition("n must be at least 1")
    _check_cap(n, TABLE_CAP, "table", args.max_n)
    rows = [(c, mixed_eulerian(c, args.kind)) for c in all_compositions(n)]
    if args.format == "json":
        print(json.dumps([{"c": list(c), "value": str(v)} for c, v in rows]))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"c{i}" for i in range(1, n + 1)] + ["value"])
        for c, v in rows:
            writer.writerow(list(c) + [str(v)])
        sys.stdout.write(buf.getvalue())
    if args.figure:
        from .plotting import plot_table

        log.info("wrote %s", plot_table(rows, args.kind, n, args.figure))
    return EXIT_OK


def cmd_oracle(args) -> int:
    n = args.n
    if n < 1:
        raise InvalidComposition("n must be at least 1")
    _check_cap(n, ORACLE_CAP, "oracle", args.max_n)
    f = volume_poly(n, args.kind, cap=max(n, ORACLE_CAP))
    if args.eval is None:
        print("\n".join(f.dump()))
        return EXIT_OK
    if len(args.eval) != n:
        raise InvalidComposition(f"--eval needs {n} coordinates, got {len(args.eval)}")
    value = f.evaluate(args.eval)
    print(f"{value.numerator}/{value.denominator}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixed-eulerian",
        description="Exact type A and type B mixed Eulerian numbers, three ways.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one mixed Eulerian number")
    _add_common(p)
    p.add_argument("--c", type=_composition_arg, required=True, help="e.g. 1,0,2,1,1 or 10211")
    p.add_argument("--method", choices=["recursion", "enumeration", "oracle", "all"], default="recursion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="list C-permutations")
    _add_common(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--division", type=_division_arg, help='e.g. "1|-|2,3|4|5"')
    source.add_argument("--c", type=_composition_arg)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--trace", action="store_true", help="show the deletion chain of each permutation")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the identities, JSON report")
    _add_common(p, with_type=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--timing", action="store_true", help="fill in millis (makes output run-dependent)")
    p.add_argument("--figure", help="also write a status chart to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="all compositions of n with their values")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--figure", help="also write a bar chart to this path")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="volume polynomial dump or exact evaluation")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", type=_rationals_arg, default=None, help="e.g. 1,1/2,0")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InvalidComposition, InvalidDivision, NotAdmissible, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INVALID
    except (CapExceeded, ResourceLimitExceeded, OracleCapExceeded) as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except OracleError as exc:
        log.error("%s", exc)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
