"""Command-line entry point: ``stirzeta <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from stirzeta.exact import decimal_render
from stirzeta.stirling import gen_stirling_butzer, gen_stirling_explicit, gen_stirling_row, stirling1
from stirzeta.zeta import error_sweep, log_error_slope, zeta_n_approx, zeta_oracle

EXIT_OK, EXIT_FAIL, EXIT_ARGS, EXIT_IO = 0, 1, 2, 3
DEFAULT_DIGITS = 30

CSV_HEADER = ["p", "N", "zeta_N_decimal", "abs_err", "ln_abs_err", "ratio_err_eN_over_N"]


class ArgumentError(Exception):
    pass


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _record(command: str, params: dict, value: Fraction, digits: int) -> str:
    rec = {
        "command": command,
        "params": params,
        "numerator": str(value.numerator),
        "denominator": str(value.denominator),
        "decimal": decimal_render(value, digits),
    }
    return json.dumps(rec, indent=2)


def _emit_value(args, command: str, params: dict, value: Fraction) -> None:
    if args.format == "dec":
        print(decimal_render(value, args.digits))
    elif args.format == "json":
        print(_record(command, params, value, args.digits))
    else:
        print(_frac(value))


def cmd_snp(args) -> int:
    if args.n < 0 or args.p < 1:
        raise ArgumentError("need n >= 0 and p >= 1")
    if args.method == "recurrence":
        value = gen_stirling_row(args.p, args.n)[args.n]
    elif args.method == "butzer":
        value = gen_stirling_butzer(args.n, args.p)
    else:
        value = gen_stirling_explicit(args.n, args.p)
    _emit_value(args, "snp", {"n": args.n, "p": args.p, "method": args.method}, value)
    return EXIT_OK


def cmd_stirling1(args) -> int:
    if not 0 <= args.k <= args.n:
        raise ArgumentError("need 0 <= k <= n")
    _emit_value(args, "stirling1", {"n": args.n, "k": args.k}, Fraction(stirling1(args.n, args.k)))
    return EXIT_OK


def cmd_zeta(args) -> int:
    if args.p < 2 or args.N < args.p:
        raise ArgumentError("need N >= p >= 2")
    limits = {}
    if args.limit_override is not None:
        first, second = args.limit_override
        if first < 0 or second < -1:
            raise ArgumentError("limit override values must be >= 0 (second may be -1 for an empty sum)")
        limits = {"first_limit": first, "second_limit": second}
        print(
            f"warning: summation limits {first}, {second} replace 4N={4 * args.N}, N-p={args.N - args.p}; "
            "the value is not zeta_N(p)",
            file=sys.stderr,
        )
    res = zeta_n_approx(args.p, args.N, **limits)
    params = {"p": args.p, "N": args.N}
    if limits:
        params.update(limits)
    _emit_value(args, "zeta", params, res.value)
    return EXIT_OK


def _sweep_rows(records, digits: int) -> list[list[str]]:
    rows = []
    for r in records:
        rows.append(
            [
                str(r.p),
                str(r.N),
                decimal_render(r.zeta_n, digits),
                decimal_render(r.abs_err, digits),
                decimal_render(Fraction(r.ln_abs_err), 12),
                decimal_render(r.ratio, digits),
            ]
        )
    return rows


def _sweep_json(records, digits: int) -> str:
    out = []
    for r in records:
        out.append(
            {
                "p": r.p,
                "N": r.N,
                "numerator": str(r.zeta_n.numerator),
                "denominator": str(r.zeta_n.denominator),
                "decimal": decimal_render(r.zeta_n, digits),
                "oracle_mid": decimal_render(r.oracle.center, digits + 20),
                "oracle_radius": decimal_render(r.oracle.radius, digits + 40),
                "abs_err": decimal_render(r.abs_err, digits),
            }
        )
    return json.dumps(out, indent=2) + "\n"


def cmd_sweep(args) -> int:
    if args.p < 2:
        raise ArgumentError("need p >= 2")
    if args.step < 1:
        raise ArgumentError("step must be positive")
    Ns = list(range(args.n_min, args.n_max + 1, args.step))
    if not Ns:
        raise ArgumentError("empty N range")
    if Ns[0] < args.p:
        raise ArgumentError("every N must be >= p")
    records = error_sweep(args.p, Ns)

    if args.format == "json":
        text = _sweep_json(records, args.digits)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(_sweep_rows(records, args.digits))
        text = buf.getvalue()
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    if len(records) >= 2:
        print(f"p={args.p} rows={len(records)} slope_ln_abs_err_vs_N={log_error_slope(records):.6f}")
    else:
        print(f"p={args.p} rows={len(records)} slope_ln_abs_err_vs_N=undefined")
    return EXIT_OK


def cmd_verify(args) -> int:
    from stirzeta.verify import run_suite

    start = time.perf_counter()
    results = run_suite(args.suite)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  [{r.suite}] {r.identity}  ({r.detail})")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed in {time.perf_counter() - start:.1f}s")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(args) -> int:
    if args.p < 2:
        raise ArgumentError("zeta has a pole at p = 1")
    if args.digits < 1:
        raise ArgumentError("digits must be >= 1")
    ball = zeta_oracle(args.p, Fraction(1, 10 ** (args.digits + 10)))
    print(decimal_render(ball.center, args.digits))
    exponent = args.digits + 10
    print(f"radius <= 1e-{exponent}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stirzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def value_opts(p, formats=("frac", "dec", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)

    p = sub.add_parser("snp", help="generalized Stirling number S_n^p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--method", choices=("explicit", "recurrence", "butzer"), default="explicit")
    value_opts(p)
    p.set_defaults(func=cmd_snp)

    p = sub.add_parser("stirling1", help="signed Stirling number of the first kind s(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    value_opts(p)
    p.set_defaults(func=cmd_stirling1)

    p = sub.add_parser("zeta", help="exact rational approximant zeta_N(p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument(
        "--limit-override",
        type=int,
        nargs=2,
        metavar=("FIRST", "SECOND"),
        help="exploration only: replace the upper indices 4N and N-p",
    )
    value_opts(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("sweep", help="error of zeta_N(p) against the oracle over a range of N")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--step", type=int, default=4)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--suite", choices=("all", "stirling", "gf", "gamma", "integral", "zeta"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="high-precision zeta(p) enclosure")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "digits", 1) < 1:
        parser.error("digits must be >= 1")
    try:
        return args.func(args)
    except ArgumentError as exc:
        parser.error(str(exc))
