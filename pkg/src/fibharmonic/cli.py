"""Batch command-line front end.

Subcommands: ``seq`` (print a sequence), ``table`` (the 4x5 grid of
hyperharmonic Fibonacci numbers), ``verify`` (run the identity registry),
``norm`` (circulant norm report), ``zeta`` (reciprocal Fibonacci convergence
table). Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 a mathematical assertion failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import circulant, identities
from .exact_math import decimal_string, format_rational
from .fib_harmonic import fib_harmonic, hyper_fib_harmonic
from .sequences import (
    fibonacci,
    harmonic,
    hyperfibonacci,
    hyperharmonic,
    lucas,
)

OK = 0
MATH_FAIL = 1
USAGE = 2

FORMATS = ("plain", "json", "csv")

ZETA_REFERENCE_DECIMALS = "3598856662"

_SEQ_NEEDS_R = {"hyperharmonic", "hyperfibharmonic", "hyperfib"}

_SEQ_FUNCS = {
    "fib": lambda n, r: Fraction(fibonacci(n)),
    "lucas": lambda n, r: Fraction(lucas(n)),
    "harmonic": lambda n, r: harmonic(n),
    "hyperharmonic": lambda n, r: hyperharmonic(n, r),
    "fibharmonic": lambda n, r: fib_harmonic(n),
    "hyperfibharmonic": lambda n, r: hyper_fib_harmonic(n, r),
    "hyperfib": lambda n, r: Fraction(hyperfibonacci(n, r)),
}


def _print_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cmd_seq(args, parser) -> int:
    name = args.name
    if name in _SEQ_NEEDS_R:
        if args.r is None:
            parser.error(f"sequence {name!r} requires --r")
        if args.r < 0:
            parser.error("--r must be >= 0")
    elif args.r is not None:
        parser.error(f"sequence {name!r} does not take --r")
    if args.n < 0:
        parser.error("n must be >= 0")

    func = _SEQ_FUNCS[name]
    values = [(k, format_rational(func(k, args.r))) for k in range(args.n + 1)]
    if args.format == "json":
        payload = {"sequence": name, "values": [{"n": k, "value": v} for k, v in values]}
        if args.r is not None:
            payload["r"] = args.r
        print(json.dumps(payload))
    elif args.format == "csv":
        _print_csv(["n", "value"], values)
    else:
        for k, v in values:
            print(f"{k}: {v}")
    return OK


def _cmd_table(args, parser) -> int:
    rows = [
        (r, [format_rational(hyper_fib_harmonic(n, r)) for n in range(1, 6)])
        for r in range(1, 5)
    ]
    if args.format == "json":
        print(json.dumps({"orders": [{"r": r, "values": vals} for r, vals in rows]}))
    elif args.format == "csv":
        _print_csv(["r", "1", "2", "3", "4", "5"], [[r, *vals] for r, vals in rows])
    else:
        widths = [max(len(vals[j]) for _, vals in rows) for j in range(5)]
        print("r\\n   " + "  ".join(str(n).rjust(widths[n - 1]) for n in range(1, 6)))
        for r, vals in rows:
            print(f"{r}     " + "  ".join(v.rjust(widths[j]) for j, v in enumerate(vals)))
    return OK


def _render_reports(reports, fmt) -> None:
    if fmt == "json":
        print(json.dumps([rep.to_json() for rep in reports]))
    elif fmt == "csv":
        _print_csv(
            ["id", "grid_size", "failures", "elapsed_ms"],
            [[rep.key, rep.grid_size, len(rep.failures), f"{rep.elapsed_ms:.3f}"] for rep in reports],
        )
    else:
        for rep in reports:
            status = "ok" if rep.passed else "FAIL"
            print(
                f"{rep.key:<9} grid={rep.grid_size:<7} failures={len(rep.failures):<4}"
                f" {rep.elapsed_ms:9.1f} ms  {status}"
            )
            for fail in rep.failures[:10]:
                print(
                    f"    at {fail.params}: lhs={format_rational(fail.lhs)}"
                    f" rhs={format_rational(fail.rhs)}",
                    file=sys.stderr,
                )
            if len(rep.failures) > 10:
                print(f"    ... {len(rep.failures) - 10} more failures", file=sys.stderr)


def _cmd_verify(args, parser) -> int:
    if args.id is not None:
        idents = identities.registry()
        try:
            ident = identities._lookup(idents, args.id)
        except identities.UnknownIdentityError as exc:
            parser.error(str(exc))
        reports = [identities.verify_identity(ident, identities.scale_overrides(ident, args.scale))]
    else:
        reports = identities.verify_all(args.scale)
    _render_reports(reports, args.format)
    return OK if all(rep.passed for rep in reports) else MATH_FAIL


def _cmd_norm(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.kind == "c2":
        if args.r is None or args.r < 1:
            parser.error("kind c2 requires --r >= 1")
        matrix = circulant.build_c2(args.n, args.r)
        result = circulant.norm_report(matrix, "C2", args.r)
    else:
        if args.r is not None:
            parser.error("kind c1 does not take --r")
        matrix = circulant.build_c1(args.n)
        result = circulant.norm_report(matrix, "C1")

    payload = result.to_json()
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        keys = list(payload)
        _print_csv(keys, [[payload[k] for k in keys]])
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return OK if result.all_ok else MATH_FAIL


def _zeta_schedule(n_max: int) -> list[int]:
    # 1-2-5 decades; always ends exactly at n_max
    points = []
    decade = 1
    while decade <= n_max:
        for mult in (1, 2, 5):
            value = mult * decade
            if value <= n_max:
                points.append(value)
        decade *= 10
    if points[-1] != n_max:
        points.append(n_max)
    return points

def _cmd_zeta(args, parser) -> int:
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")
    if not 1 <= args.digits <= 50:
        parser.error("--digits must be in 1..50")

    from .sequences import zeta_f1_partial

    rows = []
    for n in _zeta_schedule(args.n_max):
        value = zeta_f1_partial(n)
        rows.append((n, format_rational(value), decimal_string(value, args.digits)))
    final_value = zeta_f1_partial(args.n_max)
    ten = decimal_string(final_value, 10)
    match = ten.split(".", 1)[1] == ZETA_REFERENCE_DECIMALS and ten.startswith("3.")

    if args.format == "json":
        print(
            json.dumps(
                {
                    "rows": [{"n": n, "exact": e, "decimal": d} for n, e, d in rows],
                    "ten_decimal_match": match,
                }
            )
        )
    elif args.format == "csv":
        _print_csv(
            ["n", "exact", "decimal"],
            [*rows, ("ten_decimal_check", ZETA_REFERENCE_DECIMALS, "match" if match else "mismatch")],
        )
    else:
        for n, exact, dec in rows:
            print(f"{n:>8}  {dec}  {exact}")
        print(f"first 10 decimals == {ZETA_REFERENCE_DECIMALS}: {'MATCH' if match else 'MISMATCH'}")
    return OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibharmonic",
        description="Exact harmonic/hyperharmonic Fibonacci numbers, identity "
        "verification, and circulant matrix norms.",
    )
    parser.add_argument("--format", choices=FORMATS, default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    p_seq = sub.add_parser("seq", parents=[common], help="print a sequence from index 0 to n")
    p_seq.add_argument("name", choices=sorted(_SEQ_FUNCS))
    p_seq.add_argument("n", type=int)
    p_seq.add_argument("--r", type=int, default=None, help="order for the hyper* sequences")
    p_seq.set_defaults(func=_cmd_seq)

    p_table = sub.add_parser(
        "table", parents=[common], help="hyperharmonic Fibonacci numbers, orders 1..4, indices 1..5"
    )
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="verify registry identities on exact grids"
    )
    p_verify.add_argument("--id", default=None, help="registry key; all identities when omitted")
    p_verify.add_argument("--scale", choices=sorted(identities.SCALE_N_CAP), default="default")
    p_verify.set_defaults(func=_cmd_verify)

    p_norm = sub.add_parser(
        "norm", parents=[common], help="exact + numeric norm report for a circulant"
    )
    p_norm.add_argument("kind", choices=("c1", "c2"))
    p_norm.add_argument("--n", type=int, required=True)
    p_norm.add_argument("--r", type=int, default=None)
    p_norm.set_defaults(func=_cmd_norm)

    p_zeta = sub.add_parser(
        "zeta", parents=[common], help="convergence table of reciprocal Fibonacci partial sums"
    )
    p_zeta.add_argument("--n-max", type=int, default=100)
    p_zeta.add_argument("--digits", type=int, default=10)
    p_zeta.set_defaults(func=_cmd_zeta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
