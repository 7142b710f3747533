#!/usr/bin/env python3
"""Benchmark the compiled correlation kernel against the pure-Python fallback.

Both implementations compute identical integer sums; this script measures
the cyclic-correlation kernel on real and synthetic inputs and reports the
speedup, then times a full reference-table build with the active backend.

Usage: python3 benchmarks/bench_kernels.py
"""

import random
import time
import timeit

import dseq._corrpure as pure
from dseq import correlation, equal4_bipolar, kernels

try:
    import dseq._corrcore as compiled
except ImportError:
    compiled = None


def bench(func, *args, repeat=5):
    timer = timeit.Timer(lambda: func(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main():
    rng = random.Random(42)
    cases = [("p=257 equal4 (n=1024)", equal4_bipolar(257))]
    for n in (256, 2048, 8192):
        cases.append((f"random bipolar (n={n})", [rng.choice((-1, 1)) for _ in range(n)]))

    print(f"{'input':<28} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for name, seq in cases:
        t_pure = bench(pure.cyclic_corr_sums, seq, seq)
        if compiled is None:
            print(f"{name:<28} {t_pure * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        assert compiled.cyclic_corr_sums(seq, seq) == pure.cyclic_corr_sums(seq, seq)
        t_comp = bench(compiled.cyclic_corr_sums, seq, seq)
        print(
            f"{name:<28} {t_pure * 1e3:>10.2f}ms {t_comp * 1e3:>10.2f}ms "
            f"{t_pure / t_comp:>8.1f}x"
        )

    start = time.perf_counter()
    correlation.correlation_matrix(
        (17, 31, 53, 89, 113, 137, 151, 199, 257, 283, 331), stat="max"
    )
    elapsed = time.perf_counter() - start
    print(f"\nfull 11x11 reference matrix with '{kernels.backend()}' backend: {elapsed:.2f} s")
    if compiled is None:
        print("compiled kernel unavailable; rebuild with Cython for the comparison")


if __name__ == "__main__":
    main()
