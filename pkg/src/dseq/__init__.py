"""Binary sequences from prime reciprocals, with exact correlation analysis.

Expanding 1/p in base 10 and mapping each digit to bits yields binary
sequences with longer periods than the direct base-2 expansion of the same
prime; this package generates both forms, measures their cyclic auto- and
cross-correlation exactly, and reproduces the bundled reference tables
with a discrepancy report.
"""

from .correlation import (
    CorrelationMatrix,
    CorrelationSeries,
    CorrelationSummary,
    autocorrelation,
    correlation_matrix,
    crosscorrelation,
    equal4_bipolar,
    summarize,
)
from .kernels import backend
from .numtheory import (
    DSeqPrime,
    as_dseq_prime,
    digit_multiplier,
    is_prime,
    lcm,
    mod_pow,
    multiplicative_order,
)
from .report import (
    DiscrepancyEntry,
    DiscrepancyReport,
    SequenceStats,
    build_examples_report,
    build_figure_report,
    build_table_report,
    matrix_to_csv,
    parse_series_csv,
    report_to_json,
    sequence_stats,
    series_to_csv,
)
from .sequence import (
    BitSequence,
    DecimalSequence,
    MappingKind,
    binary_dseq,
    decimal_digits,
    decimal_digits_oracle,
    equal4_bits,
    format_bitstring,
    map_equal4,
    map_shortest,
    minimal_period,
    parse_bitstring,
    shortest_bits,
    to_bipolar,
)

__version__ = "0.1.0"

__all__ = [
    "BitSequence",
    "CorrelationMatrix",
    "CorrelationSeries",
    "CorrelationSummary",
    "DSeqPrime",
    "DecimalSequence",
    "DiscrepancyEntry",
    "DiscrepancyReport",
    "MappingKind",
    "SequenceStats",
    "as_dseq_prime",
    "autocorrelation",
    "backend",
    "binary_dseq",
    "build_examples_report",
    "build_figure_report",
    "build_table_report",
    "correlation_matrix",
    "crosscorrelation",
    "decimal_digits",
    "decimal_digits_oracle",
    "digit_multiplier",
    "equal4_bipolar",
    "equal4_bits",
    "format_bitstring",
    "is_prime",
    "lcm",
    "map_equal4",
    "map_shortest",
    "matrix_to_csv",
    "minimal_period",
    "mod_pow",
    "multiplicative_order",
    "parse_bitstring",
    "parse_series_csv",
    "report_to_json",
    "sequence_stats",
    "series_to_csv",
    "shortest_bits",
    "summarize",
    "to_bipolar",
]
