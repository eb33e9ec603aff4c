"""Command-line front end.

Exit codes: 0 success, 1 a verify identity failed, 2 parse error,
3 descriptor validation failure, 4 capacity exceeded.
"""

import argparse
import json
import sys

from .errors import CapacityError, DomainError, ParseError, ValidationError
from .exact_arith import format_rational
from .lattice_covers import census_table
from .series import render_text, series_to_json
from .spin_parity import spin_census
from .surface_model import (
    assemble_gw_series,
    assumptions,
    descriptor_to_json,
    load_descriptor,
    validate_descriptor,
)
from .verify import run_checks

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3, 4


def parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text!r}")
    return range(lo, hi + 1)


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _even_lambda(text):
    n = int(text)
    if n < 0 or n % 2:
        raise argparse.ArgumentTypeError("must be even and >= 0")
    return n


def _vector(text):
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return x, y


def build_parser():
    p = argparse.ArgumentParser(prog="gwseries", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("assemble", help="assemble the GW series of a surface descriptor")
    a.add_argument("--input", required=True, metavar="PATH")
    a.add_argument("--max-degree", type=_positive, default=5)
    a.add_argument("--max-lambda", type=_even_lambda, default=8)
    a.add_argument("--conjectural-etale", action="store_true")
    a.add_argument("--format", choices=("text", "machine"), default="text")

    c = sub.add_parser("census-covers", help="signed etale cover census of an elliptic fiber")
    c.add_argument("--m", type=_positive, default=1, help="multiplicity (order of the normal bundle)")
    c.add_argument("--v", type=_vector, default=None, help="character vector X,Y mod m")
    c.add_argument("--d-range", type=parse_range, default=parse_range("1..12"))
    c.add_argument("--format", choices=("text", "machine"), default="text")

    s = sub.add_parser("census-spin", help="theta characteristic census")
    s.add_argument("--h-range", type=parse_range, default=parse_range("1..4"))
    s.add_argument("--format", choices=("text", "machine"), default="text")

    v = sub.add_parser("verify", help="run every oracle-vs-closed-form identity")
    v.add_argument("--d-range", type=parse_range, default=parse_range("1..200"))
    v.add_argument("--h-range", type=parse_range, default=parse_range("1..6"))
    v.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def _assemble(args, out):
    s = load_descriptor(args.input)
    violations = validate_descriptor(s)
    if violations:
        raise ValidationError(violations)
    series = assemble_gw_series(s, args.max_degree, args.max_lambda, args.conjectural_etale)
    notes = assumptions(s, args.conjectural_etale)
    if args.format == "machine":
        doc = {"descriptor": descriptor_to_json(s), "assumptions": notes, "series": series_to_json(series)}
        out.write(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        out.write(render_text(series) + "\n")
        for n in notes:
            out.write(f"assumption: {n}\n")
    return EXIT_OK


def _census_covers(args, out):
    v = args.v if args.v is not None else ((0, 0) if args.m == 1 else (1, 0))
    rows = census_table(args.m, v, args.d_range)
    if args.format == "machine":
        doc = {
            "m": args.m,
            "v": list(v),
            "rows": [
                {"d": d, "covers": n, "trivial_pullback": t, "signed_sum": format_rational(s)}
                for d, n, t, s in rows
            ],
        }
        out.write(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        out.write(f"m={args.m} v={v}\n{'d':>5} {'covers':>8} {'trivial':>8}  signed sum\n")
        for d, n, t, s in rows:
            out.write(f"{d:>5} {n:>8} {t:>8}  {format_rational(s)}\n")
    return EXIT_OK


def _census_spin(args, out):
    rows = spin_census(args.h_range)
    if args.format == "machine":
        keys = ("h", "even_count", "odd_count", "signed_sum_even", "signed_sum_odd")
        doc = [
            dict(zip(keys, (h, e, o, format_rational(se), format_rational(so))))
            for h, e, o, se, so in rows
        ]
        out.write(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        out.write(f"{'h':>3} {'even':>10} {'odd':>10} {'sum even':>10} {'sum odd':>10}\n")
        for h, e, o, se, so in rows:
            out.write(f"{h:>3} {e:>10} {o:>10} {format_rational(se):>10} {format_rational(so):>10}\n")
    return EXIT_OK


def _verify(args, out):
    results = run_checks(args.d_range.stop - 1, args.h_range.stop - 1)
    if args.format == "machine":
        doc = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


COMMANDS = {
    "assemble": _assemble,
    "census-covers": _census_covers,
    "census-spin": _census_spin,
    "verify": _verify,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, OSError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ValidationError as exc:
        for v in exc.violations:
            err.write(f"violation: {v}\n")
        return EXIT_INVALID
    except CapacityError as exc:
        err.write(f"capacity error: {exc}\n")
        return EXIT_CAPACITY
    except DomainError as exc:
        err.write(f"invalid argument: {exc}\n")
        return EXIT_PARSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
