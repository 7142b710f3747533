# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic-correlation kernel. Same contract as ``dseq._corrpure``."""

from cpython cimport array

import array


def cyclic_corr_sums(x, y):
    """Cyclic correlation numerators: out[k] = sum_j x[j] * y[(j+k) mod n].

    x and y are equal-length sequences of ints; returns a list of n ints.
    """
    cdef array.array ax = array.array("q", x)
    cdef array.array ay = array.array("q", y)
    cdef Py_ssize_t n = len(ax)
    if n == 0:
        raise ValueError("sequences must be non-empty")
    if len(ay) != n:
        raise ValueError(f"length mismatch: {n} vs {len(ay)}")
    cdef array.array out = array.array("q", bytes(8 * n))
    cdef long long[::1] xv = ax
    cdef long long[::1] yv = ay
    cdef long long[::1] ov = out
    cdef Py_ssize_t k, j
    cdef long long acc
    with nogil:
        for k in range(n):
            acc = 0
            for j in range(n - k):
                acc += xv[j] * yv[j + k]
            for j in range(n - k, n):
                acc += xv[j] * yv[j + k - n]
            ov[k] = acc
    return out.tolist()
