"""Bundled reference values for the reproduction reports.

Table cells and worked-example strings are stored exactly as printed in
the reference material (including its 2- vs 3-decimal inconsistencies and
suspected typos) and are never recomputed; the discrepancy report compares
fresh computations against them.
"""

from decimal import Decimal

DEFAULT_TOLERANCE = Decimal("0.005")

TABLE_PRIMES = (17, 31, 53, 89, 113, 137, 151, 199, 257, 283, 331)

# Maximum correlation per pair (diagonal: autocorrelation peak).
TABLE1_MAX = (
    ("1", "0.137", "0.086", "0.130", "0.191", "0.312", "0.123", "0.125", "0.160", "0.111", "0.125"),
    ("0.137", "1", "0.125", "0.137", "0.136", "0.133", "0.26", "0.173", "0.136", "0.143", "0.165"),
    ("0.086", "0.125", "1", "0.095", "0.087", "0.096", "0.106", "0.103", "0.088", "0.093", "0.080"),
    ("0.130", "0.137", "0.095", "1", "0.123", "0.136", "0.123", "0.162", "0.117", "0.113", "0.161"),
    ("0.191", "0.136", "0.087", "0.123", "1", "0.174", "0.121", "0.122", "0.136", "0.111", "0.011"),
    ("0.312", "0.133", "0.096", "0.136", "0.174", "1", "0.116", "0.113", "0.167", "0.111", "0.095"),
    ("0.123", "0.26", "0.106", "0.123", "0.121", "0.116", "1", "0.141", "0.122", "0.133", "0.131"),
    ("0.125", "0.173", "0.103", "0.162", "0.122", "0.113", "0.141", "1", "0.122", "0.125", "0.154"),
    ("0.160", "0.136", "0.088", "0.117", "0.136", "0.167", "0.122", "0.122", "1", "0.111", "0.114"),
    ("0.111", "0.143", "0.093", "0.113", "0.111", "0.111", "0.133", "0.125", "0.111", "1", "0.109"),
    ("0.125", "0.165", "0.080", "0.161", "0.011", "0.095", "0.131", "0.154", "0.114", "0.109", "1"),
)

# Minimum correlation per pair (diagonal: autocorrelation minimum over shifts).
TABLE2_MIN = (
    ("-0.12", "0.070", "0.067", "0.005", "-0.02", "-0.25", "0.052", "0.049", "-0.02", "0.027", "0.009"),
    ("0.070", "0", "0.1", "0.075", "0.069", "0.05", "0.006", "0.070", "0.070", "0.058", "0.013"),
    ("0.067", "0.1", "-0.15", "0.079", "0.063", "0.057", "0.082", "0.079", "0.065", "0.063", "0.056"),
    ("0.005", "0.075", "0.079", "-0.09", "0.030", "-0.04", "0.058", "0.023", "0.035", "0.048", "-0.02"),
    ("-0.02", "0.069", "0.063", "0.030", "-0.12", "-0.04", "0.056", "0.048", "0.026", "0.032", "0.014"),
    ("-0.25", "0.05", "0.057", "-0.04", "-0.04", "-0.25", "0.036", "0.035", "-0.01", "0.015", "0.015"),
    ("0.052", "0.006", "0.082", "0.058", "0.056", "0.036", "-0.01", "0.067", "0.056", "0.045", "0.034"),
    ("0.049", "0.070", "0.079", "0.023", "0.048", "0.035", "0.067", "-0.06", "0.048", "0.041", "0.016"),
    ("-0.02", "0.070", "0.065", "0.035", "0.026", "-0.01", "0.056", "0.048", "-0.10", "0.034", "0.017"),
    ("0.027", "0.058", "0.063", "0.048", "0.032", "0.015", "0.045", "0.041", "0.034", "-0.14", "0.012"),
    ("0.009", "0.013", "0.056", "-0.02", "0.014", "0.015", "0.034", "0.016", "0.017", "0.012", "-0.05"),
)

# Worked-example fixtures.
P7_DECIMAL_DIGITS = "142857"
P7_BASE2_BITS = "001"
P7_BASE2_PERIOD = 3
P7_EQUAL4_BITS = "000101000010100001010111"
P7_EQUAL4_STATED_LENGTH = 24
P7_SHORTEST_BITS = "1100101000101111"
# Stated alongside the 16-character string above; kept verbatim so the
# report can flag the inconsistency instead of silently correcting it.
P7_SHORTEST_STATED_LENGTH = 15

P17_DECIMAL_DIGITS = "0588235294117647"
P17_EQUAL4_BITS = "0000010110001000001000110101001010010100000100010111011001000111"

DECIMAL_PERIODS = {17: 16, 149: 148, 457: 152}
BINARY_PERIODS = {17: 64, 149: 592, 457: 608}

# (n1, n2, q) claims for the two cross-correlation examples.
CROSS_PERIOD_CLAIMS = {(17, 19): (64, 72, 576), (137, 257): (32, 1024, 1024)}

# "8 percent" / "8.2 percent" aggregate claims over the table prime set.
MIN_OF_MAX_CLAIM = "0.080"
MAX_OF_MIN_CLAIM = "0.082"

# Figure data series: kind, source prime(s), claimed span.
FIGURES = {
    1: ("acf", 17, 64),
    2: ("acf", 149, 592),
    3: ("acf", 457, 608),
    4: ("ccf", (17, 19), 576),
    5: ("ccf", (137, 257), 1024),
}
