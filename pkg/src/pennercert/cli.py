"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (hypothesis fails or certificate
invalid), 2 parse / usage error, 3 precision cap reached (partial results are
still written).
"""

from __future__ import annotations

import argparse
import decimal
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .digraph import exceeds_one, is_perron_frobenius, scc_report
from .errors import (
    DimensionMismatch,
    GapNotReached,
    LeadingEigenvalueNotAboveOne,
    NegativeEntry,
    NonSquare,
    ParseError,
    PennerCertError,
)
from .family import claim_operator, family_stretch, sharpness_report
from .intmatrix import format_rational, parse_matrix, parse_rational
from .penner import certificate_from_json, certify, check, core_bound
from .spectral import DEFAULT_GAP, DEFAULT_MAX_ITER, spectral_radius
from .substitution import entropy_interval, incidence_matrix, parse_substitution

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GAP = 0, 1, 2, 3

SIG_DIGITS = 10


def decimal_str(q) -> str:
    """Render an exact rational with SIG_DIGITS significant digits."""
    q = Fraction(q)
    ctx = decimal.Context(prec=SIG_DIGITS)
    return str(ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator)))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_matrix(path):
    try:
        return parse_matrix(_read(path))
    except (NonSquare, NegativeEntry, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def _interval_fields(interval) -> dict:
    return {"lower": format_rational(interval.lower), "upper": format_rational(interval.upper)}


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict) and set(value) == {"lower", "upper"}:
            lo, hi = value["lower"], value["upper"]
            lines.append(f"{key}: [{lo}, {hi}] ~ [{decimal_str(Fraction(lo))}, {decimal_str(Fraction(hi))}]")
        elif isinstance(value, bool):
            lines.append(f"{key}: {str(value).lower()}")
        elif isinstance(value, list):
            lines.append(f"{key}: {json.dumps(value)}")
        elif isinstance(value, str) and "/" in value:
            lines.append(f"{key}: {value} ~ {decimal_str(Fraction(value))}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(args, report: dict, text: str | None = None):
    if args.format == "json":
        out = json.dumps(report) + "\n"
    else:
        out = text if text is not None else _render_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_analyze(args) -> int:
    A = _load_matrix(args.matrix)
    report = {"n": A.n}
    report.update(scc_report(A))
    report["perron_frobenius"] = is_perron_frobenius(A)
    report["exceeds_one"] = exceeds_one(A)
    code = EXIT_OK
    try:
        interval = spectral_radius(A, args.gap, args.max_iter)
        report["complete"] = True
    except GapNotReached as exc:
        interval = exc.interval
        report["complete"] = False
        code = EXIT_GAP
    report["spectral_radius"] = _interval_fields(interval)
    _emit(args, report)
    return code


def cmd_certify(args) -> int:
    A = _load_matrix(args.matrix)
    try:
        cert = certify(A)
    except LeadingEigenvalueNotAboveOne as exc:
        print(f"LeadingEigenvalueNotAboveOne: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = cert.to_dict()
    text = None
    if args.format == "text":
        text = (
            f"n: {cert.n}\n"
            f"dominant_vertices: {json.dumps(list(cert.dominant_vertices))}\n"
            f"n_prime: {cert.n_prime}\n"
            f"power_column_sums: {json.dumps([str(s) for s in cert.power_column_sums])}\n"
            f"exponent_n_prime: {format_rational(cert.exponent_n_prime)}\n"
            f"certified: lambda >= 2^({format_rational(cert.exponent_n_prime)})"
            f" ~ {decimal_str_float(2.0 ** float(cert.exponent_n_prime))}\n"
        )
    _emit(args, report, text)
    return EXIT_OK


def decimal_str_float(x: float) -> str:
    return f"{x:.{SIG_DIGITS}g}"


def cmd_check(args) -> int:
    if args.matrix == "-" and args.certificate == "-":
        raise ParseError("only one of MATRIX and CERTIFICATE may be standard input")
    A = _load_matrix(args.matrix)
    cert = certificate_from_json(_read(args.certificate))
    try:
        ok = check(A, cert)
    except DimensionMismatch as exc:
        print(f"DimensionMismatch: {exc}", file=sys.stderr)
        ok = False
    _emit(args, {"valid": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bound(args) -> int:
    rep = core_bound(args.chi)
    report = rep.to_dict()
    report["log_bound"] = decimal_str_float(rep.log_bound)
    report["stretch_bound"] = decimal_str_float(rep.stretch_bound)
    text = (
        f"chi_abs: {rep.chi_abs}\n"
        f"arc_cap: {rep.arc_cap}\n"
        f"exponent: {format_rational(rep.exponent)}\n"
        f"log λ ≥ log 2 / {rep.arc_cap} ≈ {decimal_str_float(rep.log_bound)}\n"
        f"λ ≥ 2^(1/{rep.arc_cap}) ≈ {decimal_str_float(rep.stretch_bound)}\n"
    )
    _emit(args, report, text)
    return EXIT_OK


def cmd_family(args) -> int:
    chi = args.chi if args.chi is not None else args.d
    rep = sharpness_report(args.d, chi, args.k)
    stretch = family_stretch(args.d, SIG_DIGITS)
    report = rep.to_dict()
    report["lambda_decimal"] = stretch.decimal
    code = EXIT_OK
    try:
        interval = spectral_radius(claim_operator(args.k), args.gap, args.max_iter)
    except GapNotReached as exc:
        interval, code = exc.interval, EXIT_GAP
    report["claim_operator_radius"] = _interval_fields(interval)
    _emit(args, report)
    return code


def cmd_entropy(args) -> int:
    try:
        sub = parse_substitution(_read(args.substitution))
    except (ValueError, KeyError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    A = incidence_matrix(sub)
    report = {"alphabet": list(sub.alphabet), "incidence": A.to_lists()}
    code = EXIT_OK
    try:
        interval = entropy_interval(sub, args.gap, args.max_iter)
        report["complete"] = True
    except GapNotReached as exc:
        interval, code = exc.interval, EXIT_GAP
        report["complete"] = False
    report["spectral_radius"] = _interval_fields(interval)
    lo = math.log(interval.lower) if interval.lower > 0 else float("-inf")
    hi = math.log(interval.upper) if interval.upper > 0 else float("-inf")
    report["entropy"] = [decimal_str_float(lo), decimal_str_float(hi)]
    _emit(args, report)
    return code


def _gap(text):
    try:
        q = parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if q <= 0:
        raise argparse.ArgumentTypeError("gap must be positive")
    return q


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gap", type=_gap, default=DEFAULT_GAP, help="interval width, e.g. 1/1000000")
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--output", default=None, help="write to this file instead of stdout")
    common.add_argument("--max-iter", type=_positive, default=DEFAULT_MAX_ITER,
                        help="refinement cap per component (exit 3 when hit)")

    parser = argparse.ArgumentParser(prog="pennercert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="SCCs, PF status and spectral interval")
    p.add_argument("matrix", help="matrix file or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", parents=[common], help="emit a column-sum certificate")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_certify, default_format="json")

    p = sub.add_parser("check", parents=[common], help="verify a certificate (exit 0/1)")
    p.add_argument("matrix")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bound", parents=[common], help="stretch bound from |chi(f)|")
    p.add_argument("chi", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("family", parents=[common], help="example family f_d report")
    p.add_argument("d", type=_positive)
    p.add_argument("--k", type=int, default=8, help="truncation size of the operator")
    p.add_argument("--chi", type=_positive, default=None, help="|chi(f_d)| (default: d)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("entropy", parents=[common], help="growth rate of a substitution")
    p.add_argument("substitution")
    p.set_defaults(func=cmd_entropy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "text")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PennerCertError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
