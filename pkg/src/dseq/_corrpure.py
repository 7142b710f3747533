"""Pure-Python correlation kernel, used when the compiled core is unavailable.

Same contract as ``dseq._corrcore``: exact integer accumulation, so both
backends produce bit-identical results.
"""

from operator import mul


def cyclic_corr_sums(x, y):
    """Cyclic correlation numerators: out[k] = sum_j x[j] * y[(j+k) mod n].

    x and y are equal-length sequences of ints; returns a list of n ints.
    """
    x = list(x)
    y = list(y)
    n = len(x)
    if n == 0:
        raise ValueError("sequences must be non-empty")
    if len(y) != n:
        raise ValueError(f"length mismatch: {n} vs {len(y)}")
    doubled = y + y
    return [sum(map(mul, x, doubled[k:k + n])) for k in range(n)]
