"""Cyclic auto- and cross-correlation of bipolar (+/-1) sequences.

All accumulation is exact integer arithmetic; each correlation value is a
numerator divided once by the span, so results are bit-identical across
kernel backends and evaluation orders.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .numtheory import DSeqPrime, as_dseq_prime
from .sequence import decimal_digits, map_equal4, to_bipolar

# Guard against runaway lcm spans from very large primes; the bundled
# reference set tops out at q = 144384.
MAX_CROSS_SPAN = 2_000_000


@dataclass(frozen=True)
class CorrelationSeries:
    """Normalized correlation value per cyclic shift k = 0 .. span-1.

    ``values[k] == numerators[k] / span`` exactly; numerators are kept so
    downstream consumers can round or compare without float error.
    """

    values: tuple[float, ...]
    numerators: tuple[int, ...]
    span: int
    pair: tuple[str, str]


@dataclass(frozen=True)
class CorrelationSummary:
    """Extremes of one correlation series, with first-occurrence shifts."""

    max_value: float
    min_value: float
    argmax_shift: int
    argmin_shift: int
    zero_shift_included: bool
    span: int
    max_numerator: int
    min_numerator: int


@dataclass(frozen=True)
class CorrelationMatrix:
    """Pairwise correlation summaries over an ordered prime set."""

    primes: tuple[DSeqPrime, ...]
    entries: tuple[tuple[CorrelationSummary, ...], ...]
    stat: str
    zero_shift_included: bool

    def value(self, i: int, j: int) -> float:
        e = self.entries[i][j]
        return e.max_value if self.stat == "max" else e.min_value

    def cell(self, i: int, j: int) -> tuple[int, int]:
        """(numerator, span) of the selected statistic at (i, j)."""
        e = self.entries[i][j]
        num = e.max_numerator if self.stat == "max" else e.min_numerator
        return num, e.span


def _bipolar_list(s: Sequence[int], what: str) -> list[int]:
    out = [int(v) for v in s]
    if not out:
        raise ValueError(f"{what} must be non-empty")
    if any(v not in (-1, 1) for v in out):
        raise ValueError(f"{what} must contain only +1/-1 values")
    return out


def autocorrelation(s: Sequence[int], label: str = "a") -> CorrelationSeries:
    """R(k) = (1/n) sum_j s[j] * s[(j+k) mod n] for k = 0 .. n-1."""
    x = _bipolar_list(s, "sequence")
    n = len(x)
    nums = kernels.cyclic_corr_sums(x, x)
    return CorrelationSeries(
        values=tuple(nm / n for nm in nums),
        numerators=tuple(nums),
        span=n,
        pair=(label, label),
    )


def crosscorrelation(
    a: Sequence[int], b: Sequence[int], labels: tuple[str, str] = ("a", "b")
) -> CorrelationSeries:
    """C(k) = (1/q) sum_j a[j mod n1] * b[(j+k) mod n2], q = lcm(n1, n2).

    C(k) depends on k only through k mod gcd(n1, n2): shifting k by n1 or
    n2 merely permutes the summands.  So both sequences are folded onto
    residue classes mod g and the g distinct sums are computed by one
    cyclic correlation of the folded integer vectors -- the same exact
    sums as the direct double loop, without the O(q^2) cost.
    """
    x = _bipolar_list(a, "sequence a")
    y = _bipolar_list(b, "sequence b")
    n1, n2 = len(x), len(y)
    g = math.gcd(n1, n2)
    q = math.lcm(n1, n2)
    if q > MAX_CROSS_SPAN:
        raise ValueError(
            f"cross-correlation span lcm({n1}, {n2}) = {q} exceeds {MAX_CROSS_SPAN}"
        )
    fold_a = [0] * g
    fold_b = [0] * g
    for u, v in enumerate(x):
        fold_a[u % g] += v
    for u, v in enumerate(y):
        fold_b[u % g] += v
    distinct = kernels.cyclic_corr_sums(fold_a, fold_b)
    nums = [distinct[k % g] for k in range(q)]
    return CorrelationSeries(
        values=tuple(nm / q for nm in nums),
        numerators=tuple(nums),
        span=q,
        pair=labels,
    )


def summarize(series: CorrelationSeries, exclude_zero_shift: bool = False) -> CorrelationSummary:
    """Max/min over shifts, first occurrence winning ties on the shift index."""
    start = 1 if exclude_zero_shift else 0
    if series.span <= start:
        raise ValueError("span must be >= 2 to exclude the zero shift")
    vals = series.values
    max_k = min_k = start
    for k in range(start + 1, series.span):
        v = vals[k]
        if v > vals[max_k]:
            max_k = k
        if v < vals[min_k]:
            min_k = k
    return CorrelationSummary(
        max_value=vals[max_k],
        min_value=vals[min_k],
        argmax_shift=max_k,
        argmin_shift=min_k,
        zero_shift_included=not exclude_zero_shift,
        span=series.span,
        max_numerator=series.numerators[max_k],
        min_numerator=series.numerators[min_k],
    )


def equal4_bipolar(p: int | DSeqPrime) -> list[int]:
    """The +/-1 image of the 4-bit-per-digit binary sequence for 1/p."""
    return to_bipolar(map_equal4(decimal_digits(p)))


def correlation_matrix(
    primes: Sequence[int | DSeqPrime],
    stat: str = "max",
    exclude_zero_shift: bool = False,
    jobs: int = 1,
) -> CorrelationMatrix:
    """Pairwise summaries over the equal-length binary sequences of a prime set.

    Off-diagonal entries summarize the cross-correlation of the pair;
    diagonal entries summarize the autocorrelation.  With jobs > 1 the
    cells are evaluated on a thread pool; results are assembled in index
    order, so the output is identical regardless of parallelism.
    """
    if stat not in ("max", "min"):
        raise ValueError(f"stat must be 'max' or 'min', got {stat!r}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    plist = [as_dseq_prime(p) for p in primes]
    if not plist:
        raise ValueError("at least one prime is required")
    seen: set[int] = set()
    for prime in plist:
        if prime.p in seen:
            raise ValueError(f"duplicate prime {prime.p} in matrix input")
        seen.add(prime.p)
        if prime.digit_multiplier is None:
            raise ValueError(f"p={prime.p} is not valid for base-10 generation")
    seqs = [equal4_bipolar(prime) for prime in plist]
    labels = [str(prime) for prime in plist]
    n = len(plist)

    def one_cell(ij: tuple[int, int]) -> CorrelationSummary:
        i, j = ij
        if i == j:
            series = autocorrelation(seqs[i], label=labels[i])
        else:
            series = crosscorrelation(seqs[i], seqs[j], labels=(labels[i], labels[j]))
        return summarize(series, exclude_zero_shift)

    index_pairs = [(i, j) for i in range(n) for j in range(n)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            flat = list(pool.map(one_cell, index_pairs))
    else:
        flat = [one_cell(ij) for ij in index_pairs]
    entries = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    return CorrelationMatrix(
        primes=tuple(plist),
        entries=entries,
        stat=stat,
        zero_shift_included=not exclude_zero_shift,
    )
