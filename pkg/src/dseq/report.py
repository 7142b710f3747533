"""Reproduction reports: computed tables/figures vs the bundled reference values.

Verdicts are decided in exact decimal arithmetic: the computed rational is
rounded to 3 decimals (half-even, the printed precision of the reference
tables) and compared against the verbatim reference string.  Mismatches
are data, never failures.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import refdata
from .correlation import (
    CorrelationMatrix,
    CorrelationSeries,
    autocorrelation,
    correlation_matrix,
    crosscorrelation,
    equal4_bipolar,
)
from .sequence import (
    BitSequence,
    binary_dseq,
    decimal_digits,
    map_equal4,
    map_shortest,
)

MATCH = "match"
MISMATCH = "mismatch"


def rational_3dp(numerator: int, denominator: int) -> Decimal:
    """Correctly rounded 3-decimal value of an exact integer ratio."""
    with localcontext() as ctx:
        ctx.prec = 50
        return (Decimal(numerator) / Decimal(denominator)).quantize(
            Decimal("0.001"), rounding=ROUND_HALF_EVEN
        )


@dataclass(frozen=True)
class DiscrepancyEntry:
    """One compared quantity: a reference value against its recomputation."""

    location: str
    reference: str
    computed: float | int | str
    verdict: str
    computed_3dp: str | None = None
    delta: str | None = None

    def as_dict(self) -> dict:
        return {
            "location": self.location,
            "reference": self.reference,
            "computed": self.computed,
            "computed_3dp": self.computed_3dp,
            "delta": self.delta,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    target: str
    tolerance: Decimal
    entries: tuple[DiscrepancyEntry, ...]
    context: dict = field(default_factory=dict)
    summary_extra: dict = field(default_factory=dict)

    def mismatches(self) -> tuple[DiscrepancyEntry, ...]:
        return tuple(e for e in self.entries if e.verdict != MATCH)

    def as_dict(self) -> dict:
        doc: dict = {"target": self.target, "tolerance": str(self.tolerance)}
        doc.update(self.context)
        doc["entries"] = [e.as_dict() for e in self.entries]
        bad = self.mismatches()
        summary = {
            "total": len(self.entries),
            "matches": len(self.entries) - len(bad),
            "mismatches": len(bad),
            "mismatched_locations": [e.location for e in bad],
        }
        summary.update(self.summary_extra)
        doc["summary"] = summary
        return doc


def compare_ratio(
    location: str, reference: str, numerator: int, denominator: int, tolerance: Decimal
) -> DiscrepancyEntry:
    """Compare an exact ratio with a printed reference number."""
    rounded = rational_3dp(numerator, denominator)
    delta = rounded - Decimal(reference)
    verdict = MATCH if abs(delta) <= tolerance else MISMATCH
    return DiscrepancyEntry(
        location=location,
        reference=reference,
        computed=numerator / denominator,
        verdict=verdict,
        computed_3dp=str(rounded),
        delta=str(delta),
    )


def compare_int(location: str, reference: int, computed: int) -> DiscrepancyEntry:
    return DiscrepancyEntry(
        location=location,
        reference=str(reference),
        computed=computed,
        verdict=MATCH if computed == reference else MISMATCH,
        delta=str(computed - reference),
    )


def compare_str(location: str, reference: str, computed: str) -> DiscrepancyEntry:
    return DiscrepancyEntry(
        location=location,
        reference=reference,
        computed=computed,
        verdict=MATCH if computed == reference else MISMATCH,
    )


def _computed_cells(matrix: CorrelationMatrix) -> list[list[str]]:
    n = len(matrix.primes)
    return [[str(rational_3dp(*matrix.cell(i, j))) for j in range(n)] for i in range(n)]


def build_table_report(
    which: int,
    tolerance: Decimal = refdata.DEFAULT_TOLERANCE,
    jobs: int = 1,
) -> tuple[CorrelationMatrix, DiscrepancyReport]:
    """Recompute reference table 1 (max) or 2 (min) and diff it cell by cell."""
    if which not in (1, 2):
        raise ValueError(f"table number must be 1 or 2, got {which}")
    stat = "max" if which == 1 else "min"
    reference = refdata.TABLE1_MAX if which == 1 else refdata.TABLE2_MIN
    matrix = correlation_matrix(refdata.TABLE_PRIMES, stat=stat, jobs=jobs)
    entries = []
    off_total = off_match = 0
    for i, row_prime in enumerate(refdata.TABLE_PRIMES):
        for j, col_prime in enumerate(refdata.TABLE_PRIMES):
            num, span = matrix.cell(i, j)
            entry = compare_ratio(
                f"table{which}[{row_prime},{col_prime}]",
                reference[i][j],
                num,
                span,
                tolerance,
            )
            entries.append(entry)
            if i != j:
                off_total += 1
                off_match += entry.verdict == MATCH
    report = DiscrepancyReport(
        target=f"table{which}",
        tolerance=tolerance,
        entries=tuple(entries),
        context={
            "stat": stat,
            "zero_shift_included": True,
            "diagonal": f"autocorrelation {stat} over all cyclic shifts",
            "primes": list(refdata.TABLE_PRIMES),
            "computed_matrix": _computed_cells(matrix),
        },
        summary_extra={
            "off_diagonal_total": off_total,
            "off_diagonal_matches": off_match,
            "off_diagonal_match_fraction": off_match / off_total,
        },
    )
    return matrix, report


def build_figure_report(
    number: int, tolerance: Decimal = refdata.DEFAULT_TOLERANCE
) -> tuple[CorrelationSeries, DiscrepancyReport]:
    """Recompute one figure's data series and check its stated span (and peak)."""
    if number not in refdata.FIGURES:
        raise ValueError(f"figure number must be 1..5, got {number}")
    kind, source, span_claim = refdata.FIGURES[number]
    entries = []
    if kind == "acf":
        series = autocorrelation(equal4_bipolar(source), label=str(source))
        entries.append(compare_int(f"figure{number}.span", span_claim, series.span))
        entries.append(
            compare_ratio(
                f"figure{number}.zero_shift_peak",
                "1",
                series.numerators[0],
                series.span,
                tolerance,
            )
        )
    else:
        pa, pb = source
        series = crosscorrelation(
            equal4_bipolar(pa), equal4_bipolar(pb), labels=(str(pa), str(pb))
        )
        entries.append(compare_int(f"figure{number}.span", span_claim, series.span))
    report = DiscrepancyReport(
        target=f"figure{number}",
        tolerance=tolerance,
        entries=tuple(entries),
        context={"kind": kind, "source": list(source) if kind == "ccf" else source},
    )
    return series, report


def build_examples_report(
    tolerance: Decimal = refdata.DEFAULT_TOLERANCE, jobs: int = 1
) -> DiscrepancyReport:
    """Check every worked-example string, period claim, and aggregate claim."""
    entries = []

    d7 = decimal_digits(7)
    entries.append(compare_str("p7.decimal_digits", refdata.P7_DECIMAL_DIGITS, d7.as_string()))
    e7 = map_equal4(d7)
    entries.append(compare_str("p7.equal4_bits", refdata.P7_EQUAL4_BITS, e7.as_string()))
    entries.append(
        compare_int("p7.equal4_bit_length", refdata.P7_EQUAL4_STATED_LENGTH, e7.structural_period)
    )
    s7 = map_shortest(d7)
    entries.append(compare_str("p7.shortest_bits", refdata.P7_SHORTEST_BITS, s7.as_string()))
    entries.append(
        compare_int(
            "p7.shortest_stated_bit_length",
            refdata.P7_SHORTEST_STATED_LENGTH,
            s7.structural_period,
        )
    )
    b7 = binary_dseq(7)
    entries.append(compare_str("p7.base2_bits", refdata.P7_BASE2_BITS, b7.as_string()))
    entries.append(compare_int("p7.base2_period", refdata.P7_BASE2_PERIOD, b7.structural_period))

    d17 = decimal_digits(17)
    entries.append(compare_str("p17.decimal_digits", refdata.P17_DECIMAL_DIGITS, d17.as_string()))
    entries.append(compare_str("p17.equal4_bits", refdata.P17_EQUAL4_BITS, map_equal4(d17).as_string()))
    for p in sorted(refdata.DECIMAL_PERIODS):
        dec = decimal_digits(p)
        entries.append(compare_int(f"p{p}.decimal_period", refdata.DECIMAL_PERIODS[p], dec.period))
        entries.append(
            compare_int(f"p{p}.binary_period", refdata.BINARY_PERIODS[p], map_equal4(dec).structural_period)
        )

    for (pa, pb), (n1, n2, q) in sorted(refdata.CROSS_PERIOD_CLAIMS.items()):
        la = map_equal4(decimal_digits(pa)).structural_period
        lb = map_equal4(decimal_digits(pb)).structural_period
        entries.append(compare_int(f"pair({pa},{pb}).n1", n1, la))
        entries.append(compare_int(f"pair({pa},{pb}).n2", n2, lb))
        entries.append(compare_int(f"pair({pa},{pb}).span", q, math.lcm(la, lb)))

    matrix = correlation_matrix(refdata.TABLE_PRIMES, stat="max", jobs=jobs)
    n = len(matrix.primes)
    off = [matrix.entries[i][j] for i in range(n) for j in range(n) if i != j]
    min_of_max = min(Fraction(e.max_numerator, e.span) for e in off)
    max_of_min = max(Fraction(e.min_numerator, e.span) for e in off)
    entries.append(
        compare_ratio(
            "tables.min_of_max_offdiag",
            refdata.MIN_OF_MAX_CLAIM,
            min_of_max.numerator,
            min_of_max.denominator,
            tolerance,
        )
    )
    entries.append(
        compare_ratio(
            "tables.max_of_min_offdiag",
            refdata.MAX_OF_MIN_CLAIM,
            max_of_min.numerator,
            max_of_min.denominator,
            tolerance,
        )
    )
    return DiscrepancyReport(target="examples", tolerance=tolerance, entries=tuple(entries))


@dataclass(frozen=True)
class SequenceStats:
    """Balance and run diagnostics over one period of a bit sequence."""

    length: int
    ones_count: int
    balance: float
    longest_run: int

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "ones_count": self.ones_count,
            "balance": self.balance,
            "longest_run": self.longest_run,
        }


def sequence_stats(b: BitSequence | Sequence[int]) -> SequenceStats:
    """Length, ones count, (ones-zeros)/length, and the longest same-symbol run.

    The run is measured over the listed period, without wrapping.
    """
    bits = tuple(b.bits if isinstance(b, BitSequence) else b)
    if not bits:
        raise ValueError("sequence must be non-empty")
    if any(bit not in (0, 1) for bit in bits):
        raise ValueError("bits must be 0 or 1")
    ones = sum(bits)
    n = len(bits)
    longest = run = 1
    for i in range(1, n):
        run = run + 1 if bits[i] == bits[i - 1] else 1
        longest = max(longest, run)
    return SequenceStats(
        length=n,
        ones_count=ones,
        balance=(2 * ones - n) / n,
        longest_run=longest,
    )


def series_to_csv(series: CorrelationSeries) -> str:
    """'shift,value' rows, fixed 6-decimal values, LF line endings."""
    lines = ["shift,value"]
    lines.extend(f"{k},{v:.6f}" for k, v in enumerate(series.values))
    return "\n".join(lines) + "\n"


def parse_series_csv(text: str) -> list[tuple[int, float]]:
    """Inverse of `series_to_csv` (values at the emitted 6-decimal precision)."""
    lines = text.strip().split("\n")
    if not lines or lines[0] != "shift,value":
        raise ValueError("expected a 'shift,value' header row")
    out = []
    for line in lines[1:]:
        shift, value = line.split(",")
        out.append((int(shift), float(value)))
    return out


def matrix_to_csv(matrix: CorrelationMatrix) -> str:
    """Prime-labelled square matrix of the selected statistic, 3-decimal cells."""
    labels = [str(p) for p in matrix.primes]
    lines = ["primes," + ",".join(labels)]
    cells = _computed_cells(matrix)
    lines.extend(f"{label}," + ",".join(row) for label, row in zip(labels, cells))
    return "\n".join(lines) + "\n"


def report_to_json(report: DiscrepancyReport) -> str:
    return json.dumps(report.as_dict(), indent=2) + "\n"
