"""Command-line front end.

Subcommands: gen, acf, ccf, matrix, reproduce, stats, order.
Exit codes: 0 success, 2 usage/domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path

from . import refdata
from .correlation import autocorrelation, correlation_matrix, crosscorrelation, equal4_bipolar
from .numtheory import as_dseq_prime, multiplicative_order
from .report import (
    build_examples_report,
    build_figure_report,
    build_table_report,
    matrix_to_csv,
    report_to_json,
    sequence_stats,
    series_to_csv,
)
from .sequence import (
    binary_dseq,
    decimal_digits,
    format_bitstring,
    map_equal4,
    map_shortest,
    parse_bitstring,
    to_bipolar,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

REPRODUCE_TARGETS = (
    "table1",
    "table2",
    "figure1",
    "figure2",
    "figure3",
    "figure4",
    "figure5",
    "examples",
    "all",
)


def _decimal_arg(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise ValueError(f"not a decimal number: {text!r}")


def _primes_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"--primes expects a comma-separated integer list, got {text!r}")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
        print(f"wrote {output}", file=sys.stderr)


def _load_bits(path: str) -> tuple[int, ...]:
    return parse_bitstring(Path(path).read_text(encoding="utf-8"))


def _generate(prime: int, base: int, mapping: str | None):
    """BitSequence plus the decimal digits (base 10 only) for one period."""
    if base == 2:
        if mapping is not None:
            raise ValueError("--mapping applies to base 10 only")
        return binary_dseq(prime), None
    dec = decimal_digits(prime)
    mapper = map_shortest if mapping == "shortest" else map_equal4
    return mapper(dec), dec


def _bits_from_prime(prime: int, mapping: str) -> tuple[int, ...]:
    if mapping == "direct":
        return binary_dseq(prime).bits
    dec = decimal_digits(prime)
    return (map_shortest(dec) if mapping == "shortest" else map_equal4(dec)).bits


def cmd_gen(args: argparse.Namespace) -> int:
    bitseq, dec = _generate(args.prime, args.base, args.mapping)
    if args.format == "bits":
        _emit(format_bitstring(bitseq), args.output)
    elif args.format == "csv":
        lines = ["index,bit"]
        lines.extend(f"{i},{b}" for i, b in enumerate(bitseq.bits))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        doc = {
            "prime": bitseq.source_prime.p,
            "base": args.base,
            "mapping": bitseq.mapping.value,
            "period": bitseq.structural_period,
        }
        if dec is not None:
            doc["digits"] = dec.as_string()
        doc["bits"] = bitseq.as_string()
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _bipolar_from_args(args: argparse.Namespace) -> list[int]:
    if args.input is not None:
        return to_bipolar(_load_bits(args.input))
    if args.prime is None:
        raise ValueError("either --prime or --input is required")
    return to_bipolar(_bits_from_prime(args.prime, args.mapping))


def cmd_acf(args: argparse.Namespace) -> int:
    series = autocorrelation(_bipolar_from_args(args))
    _emit(series_to_csv(series), args.output)
    return EXIT_OK


def cmd_ccf(args: argparse.Namespace) -> int:
    series = crosscorrelation(
        equal4_bipolar(args.prime_a),
        equal4_bipolar(args.prime_b),
        labels=(str(args.prime_a), str(args.prime_b)),
    )
    _emit(series_to_csv(series), args.output)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    matrix = correlation_matrix(
        args.primes,
        stat=args.stat,
        exclude_zero_shift=args.exclude_zero_shift,
        jobs=args.jobs,
    )
    if args.format == "csv":
        _emit(matrix_to_csv(matrix), args.output)
    else:
        n = len(matrix.primes)
        doc = {
            "primes": [p.p for p in matrix.primes],
            "stat": matrix.stat,
            "zero_shift_included": matrix.zero_shift_included,
            "values": [[matrix.value(i, j) for j in range(n)] for i in range(n)],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _reproduce_one(target: str, tolerance: Decimal, jobs: int, outdir: Path | None) -> dict:
    if target.startswith("table"):
        matrix, report = build_table_report(int(target[-1]), tolerance=tolerance, jobs=jobs)
        if outdir is not None:
            _emit(matrix_to_csv(matrix), str(outdir / f"{target}_computed.csv"))
            _emit(report_to_json(report), str(outdir / f"{target}_report.json"))
    elif target.startswith("figure"):
        series, report = build_figure_report(int(target[-1]), tolerance=tolerance)
        if outdir is not None:
            _emit(series_to_csv(series), str(outdir / f"{target}_data.csv"))
            _emit(report_to_json(report), str(outdir / f"{target}_report.json"))
    else:
        report = build_examples_report(tolerance=tolerance, jobs=jobs)
        if outdir is not None:
            _emit(report_to_json(report), str(outdir / "examples_report.json"))
    return report.as_dict()


def cmd_reproduce(args: argparse.Namespace) -> int:
    targets = list(REPRODUCE_TARGETS[:-1]) if args.target == "all" else [args.target]
    outdir = None
    if args.output is not None:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
    docs = [_reproduce_one(t, args.tolerance, args.jobs, outdir) for t in targets]
    if outdir is None:
        payload = docs[0] if len(docs) == 1 else {"reports": docs}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    doc: dict = {}
    if args.input is not None:
        bits = _load_bits(args.input)
        doc["input"] = args.input
    else:
        if args.prime is None:
            raise ValueError("either --prime or --input is required")
        bits = _bits_from_prime(args.prime, args.mapping)
        doc["prime"] = args.prime
        doc["mapping"] = args.mapping
    doc.update(sequence_stats(bits).as_dict())
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    prime = as_dseq_prime(args.prime)
    order = multiplicative_order(args.base, prime)
    if args.format == "json":
        doc = {"prime": prime.p, "base": args.base, "order": order}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit(f"{order}\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dseq",
        description="Binary sequences from prime reciprocals: generation, "
        "correlation analysis, and reference-table reproduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit one structural period of a sequence")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--base", type=int, choices=(2, 10), default=10)
    p.add_argument("--mapping", choices=("equal4", "shortest"), default=None,
                   help="digit-to-bit mapping for base 10 (default equal4)")
    p.add_argument("--format", choices=("bits", "csv", "json"), default="bits")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("acf", help="autocorrelation series as shift,value CSV")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--mapping", choices=("equal4", "shortest", "direct"), default="equal4")
    p.add_argument("--input", default=None, help="analyze a bitstring file instead")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_acf)

    p = sub.add_parser("ccf", help="cross-correlation series as shift,value CSV")
    p.add_argument("--prime-a", type=int, required=True)
    p.add_argument("--prime-b", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_ccf)

    p = sub.add_parser("matrix", help="pairwise max/min correlation matrix")
    p.add_argument("--primes", type=_primes_arg, default=list(refdata.TABLE_PRIMES),
                   help="comma-separated primes (default: the bundled reference set)")
    p.add_argument("--stat", choices=("max", "min"), default="max")
    p.add_argument("--exclude-zero-shift", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("reproduce", help="recompute reference tables/figures and diff them")
    p.add_argument("target", choices=REPRODUCE_TARGETS)
    p.add_argument("--tolerance", type=_decimal_arg, default=refdata.DEFAULT_TOLERANCE)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None,
                   help="directory for computed CSVs and report JSONs (default: report to stdout)")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("stats", help="balance/run summary of one period (JSON)")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--mapping", choices=("equal4", "shortest", "direct"), default="equal4")
    p.add_argument("--input", default=None, help="analyze a bitstring file instead")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("order", help="multiplicative order of the base modulo a prime")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--base", type=int, choices=(2, 10), default=10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_order)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"dseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dseq: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
