"""Command-line front end.

Every subcommand streams one record per prime, TSV by default or JSON
lines with --format json.  Exit codes: 0 all checks passed, 1 at least
one mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import curves, quadforms, verify
from .charsums import jacobsthal_sum
from .errors import JacobsthalError
from .modarith import OddPrime
from .primes import primes_in_range

JOBS_ENV = "JACOBSTHAL_JOBS"

CURVE_COEFFS = {
    "e1": curves.E1_COEFFS,
    "e2": curves.E2_COEFFS,
    "x1": curves.X1_COEFFS,
    "x2": curves.X2_COEFFS,
}


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
    else:
        out.write("\t".join(_tsv_field(v) for v in record.values()) + "\n")


def _tsv_field(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, dict):
        return ";".join(f"{k}={x}" for k, x in v.items())
    return str(v)


def _parse_poly(text: str) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(c.strip()) for c in text.split(","))
    except ValueError as exc:
        raise JacobsthalError(f"malformed polynomial {text!r}: {exc}") from None
    if not coeffs:
        raise JacobsthalError("empty polynomial")
    return coeffs


def _cmd_sum(args, out) -> int:
    p = OddPrime(args.prime)
    result = jacobsthal_sum(_parse_poly(args.poly), p)
    _emit({"p": int(p), "sum": result.raw_sum}, args.format, out)
    return 0


def _cmd_repr(args, out) -> int:
    p = OddPrime(args.prime)
    if args.cubic:
        rep = quadforms.cubic_rep(p)
        _emit({"p": int(p), "A": rep.a, "B": rep.b}, args.format, out)
    else:
        rep = quadforms.cornacchia(p, args.d)
        _emit({"p": int(p), "a": rep.a, "b": rep.b}, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    failed = 0
    tested = 0
    passed = 0
    for report in verify.iter_reports(args.lo, args.hi, args.theorem, jobs=args.jobs):
        tested += 1
        if report.holds:
            passed += 1
        else:
            failed += 1
        _emit(
            {
                "p": report.p,
                "theorem": report.theorem,
                "holds": report.holds,
                "values": report.values,
                "detail": report.detail,
            },
            args.format,
            out,
        )
    summary = {"lo": args.lo, "hi": args.hi, "tested": tested, "passed": passed, "failed": failed}
    if args.format == "json":
        out.write(json.dumps({"summary": summary}, separators=(",", ":")) + "\n")
    else:
        out.write("#summary\t" + "\t".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return 1 if failed else 0


def _cmd_lfactor(args, out) -> int:
    p = OddPrime(args.prime)
    coeffs = CURVE_COEFFS[args.curve]
    model = curves.HyperellipticModel.from_coeffs(coeffs, p)
    n1 = curves.count_points(model, p, 1)
    if model.genus == 1:
        factor = curves.local_factor_genus1(p, n1)
    else:
        n2 = curves.count_points(model, p, 2)
        factor = curves.local_factor_genus2(p, n1, n2)
    record: dict = {"p": int(p)}
    for i, c in enumerate(factor.coeffs, start=1):
        record[f"c{i}"] = c
    _emit(record, args.format, out)
    return 0


def _cmd_chi(args, out) -> int:
    p = OddPrime(args.prime)
    value = curves.kummer_character(p, args.k)
    _emit(
        {"p": int(p), "k": args.k, "exponent": value.exponent, "value": value.value_str},
        args.format,
        out,
    )
    return 0


def _cmd_trace_check(args, out) -> int:
    failed = 0
    for p in primes_in_range(max(args.lo, 3), args.hi):
        ok = curves.trace_identity_check(p)
        if not ok:
            failed += 1
        _emit({"p": p, "ok": ok}, args.format, out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobsthal",
        description="Jacobsthal sums, quadratic-form representations, and local L-factors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    def add_range(p):
        p.add_argument("--from", dest="lo", type=int, required=True, help="lower bound (inclusive)")
        p.add_argument("--to", dest="hi", type=int, required=True, help="upper bound (inclusive)")

    p_sum = sub.add_parser("sum", help="raw Jacobsthal sum for a polynomial")
    p_sum.add_argument("--poly", required=True, help="coefficients c0,c1,...,cd (constant first)")
    p_sum.add_argument("--prime", type=int, required=True)
    add_format(p_sum)
    p_sum.set_defaults(func=_cmd_sum)

    p_repr = sub.add_parser("repr", help="representation of p by a quadratic form")
    p_repr.add_argument("--prime", type=int, required=True)
    group = p_repr.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=int, choices=(1, 2), help="p = a^2 + d*b^2")
    group.add_argument("--cubic", action="store_true", help="3p = A^2 + AB + B^2")
    add_format(p_repr)
    p_repr.set_defaults(func=_cmd_repr)

    p_verify = sub.add_parser("verify", help="run theorem verifiers over a prime range")
    p_verify.add_argument("theorem", choices=verify.THEOREMS + ("all",))
    add_range(p_verify)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs())
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_lf = sub.add_parser("lfactor", help="local L-factor coefficients at a good prime")
    p_lf.add_argument("--curve", choices=sorted(CURVE_COEFFS), required=True)
    p_lf.add_argument("--prime", type=int, required=True)
    add_format(p_lf)
    p_lf.set_defaults(func=_cmd_lfactor)

    p_chi = sub.add_parser("chi", help="Kummer character value at p")
    p_chi.add_argument("--prime", type=int, required=True)
    p_chi.add_argument("--k", type=int, choices=(0, 1, 2, 3), required=True)
    add_format(p_chi)
    p_chi.set_defaults(func=_cmd_chi)

    p_tc = sub.add_parser("trace-check", help="trace identity pass/fail per prime")
    add_range(p_tc)
    p_tc.add_argument("--jobs", type=int, default=_default_jobs())
    add_format(p_tc)
    p_tc.set_defaults(func=_cmd_trace_check)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except JacobsthalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
