import random

import pytest

import dseq._corrpure as pure_kernel
from dseq.correlation import (
    CorrelationSeries,
    autocorrelation,
    correlation_matrix,
    crosscorrelation,
    equal4_bipolar,
    summarize,
)
from oracles import naive_auto_sums, naive_cross_sums

try:
    import dseq._corrcore as compiled_kernel
except ImportError:
    compiled_kernel = None

KERNELS = [pytest.param(pure_kernel, id="python")]
if compiled_kernel is not None:
    KERNELS.append(pytest.param(compiled_kernel, id="compiled"))


def random_bipolar(rng, n):
    return [rng.choice((-1, 1)) for _ in range(n)]


@pytest.mark.parametrize("kernel", KERNELS)
class TestKernels:
    def test_hand_computed_case(self, kernel):
        # x=(1,1,-1), y=(1,-1,-1): shifts give sums 1, -3, 1
        assert kernel.cyclic_corr_sums([1, 1, -1], [1, -1, -1]) == [1, -3, 1]

    def test_single_element(self, kernel):
        assert kernel.cyclic_corr_sums([3], [4]) == [12]

    def test_matches_naive_oracle(self, kernel):
        rng = random.Random(404)
        for _ in range(50):
            n = rng.randrange(1, 25)
            x = random_bipolar(rng, n)
            y = random_bipolar(rng, n)
            assert kernel.cyclic_corr_sums(x, y) == naive_cross_sums(x, y)

    def test_rejects_bad_input(self, kernel):
        with pytest.raises(ValueError):
            kernel.cyclic_corr_sums([], [])
        with pytest.raises(ValueError):
            kernel.cyclic_corr_sums([1, 1], [1])


@pytest.mark.skipif(compiled_kernel is None, reason="compiled kernel not built")
def test_backends_bit_identical():
    rng = random.Random(505)
    for _ in range(25):
        n = rng.randrange(1, 200)
        x = [rng.randrange(-50, 50) for _ in range(n)]
        y = [rng.randrange(-50, 50) for _ in range(n)]
        assert pure_kernel.cyclic_corr_sums(x, y) == compiled_kernel.cyclic_corr_sums(x, y)


class TestAutocorrelation:
    def test_zero_shift_is_exactly_one(self):
        for p in (3, 7, 17, 149):
            series = autocorrelation(equal4_bipolar(p))
            assert series.values[0] == 1.0
            assert series.numerators[0] == series.span

    def test_constant_sequence_is_flat(self):
        series = autocorrelation([1] * 9)
        assert series.values == (1.0,) * 9

    def test_p17_series(self):
        series = autocorrelation(equal4_bipolar(17))
        assert series.span == 64
        # exact minimum over nonzero shifts is -8/64 = -0.125
        assert min(series.numerators[1:]) == -8
        assert min(series.values[1:]) == -0.125

    def test_matches_naive_oracle(self):
        s = equal4_bipolar(17)
        assert list(autocorrelation(s).numerators) == naive_auto_sums(s)

    def test_cyclic_symmetry(self):
        for p in (7, 17, 31):
            series = autocorrelation(equal4_bipolar(p))
            n = series.span
            for k in range(1, n):
                assert series.numerators[k] == series.numerators[n - k]

    def test_rejects_empty_and_non_bipolar(self):
        with pytest.raises(ValueError):
            autocorrelation([])
        with pytest.raises(ValueError):
            autocorrelation([1, 0, -1])


class TestCrossCorrelation:
    def test_reference_spans(self):
        c = crosscorrelation(equal4_bipolar(17), equal4_bipolar(19))
        assert c.span == 576
        c = crosscorrelation(equal4_bipolar(137), equal4_bipolar(257))
        assert c.span == 1024

    def test_same_sequence_peaks_at_zero(self):
        s = equal4_bipolar(17)
        c = crosscorrelation(s, s)
        assert c.values[0] == 1.0
        assert list(c.numerators) == list(autocorrelation(s).numerators)

    def test_matches_naive_oracle_random(self):
        rng = random.Random(606)
        for _ in range(40):
            a = random_bipolar(rng, rng.randrange(1, 25))
            b = random_bipolar(rng, rng.randrange(1, 25))
            assert list(crosscorrelation(a, b).numerators) == naive_cross_sums(a, b)

    def test_matches_naive_oracle_real_pair(self):
        a, b = equal4_bipolar(17), equal4_bipolar(19)
        assert list(crosscorrelation(a, b).numerators) == naive_cross_sums(a, b)

    def test_reversal_symmetry(self):
        a, b = equal4_bipolar(17), equal4_bipolar(31)
        cab = crosscorrelation(a, b)
        cba = crosscorrelation(b, a)
        q = cab.span
        for k in range(q):
            assert cab.numerators[k] == cba.numerators[(q - k) % q]

    def test_sum_identity(self):
        a, b = equal4_bipolar(19), equal4_bipolar(53)
        c = crosscorrelation(a, b)
        q = c.span
        ext_a = sum(a) * (q // len(a))
        ext_b = sum(b) * (q // len(b))
        assert sum(c.numerators) == ext_a * ext_b
        total = sum(c.values)
        assert abs(total - ext_a * ext_b / q) <= 1e-12 * max(1.0, abs(total))

    def test_values_bounded_and_exact_multiples(self):
        c = crosscorrelation(equal4_bipolar(17), equal4_bipolar(19))
        for value, num in zip(c.values, c.numerators):
            assert -1.0 <= value <= 1.0
            assert value == num / c.span

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            crosscorrelation([], [1])

    def test_rejects_absurd_span(self):
        # primes near 1e5 would need a multi-billion-element series
        a = [1] * 1999993
        with pytest.raises(ValueError):
            crosscorrelation(a, [1, -1])


class TestSummarize:
    def test_anchor_pair_17_137(self):
        c = crosscorrelation(equal4_bipolar(17), equal4_bipolar(137))
        s = summarize(c)
        assert s.max_value == 0.3125
        assert s.max_numerator == 20
        assert s.span == 64

    def test_first_occurrence_tie_breaking(self):
        series = CorrelationSeries(
            values=(0.5, -0.5, 0.5, -0.5),
            numerators=(2, -2, 2, -2),
            span=4,
            pair=("a", "b"),
        )
        s = summarize(series)
        assert (s.argmax_shift, s.argmin_shift) == (0, 1)
        s = summarize(series, exclude_zero_shift=True)
        assert (s.argmax_shift, s.argmin_shift) == (2, 1)
        assert not s.zero_shift_included

    def test_autocorrelation_max_is_one(self):
        s = summarize(autocorrelation(equal4_bipolar(31)))
        assert s.max_value == 1.0
        assert s.argmax_shift == 0

    def test_exclude_zero_requires_span_2(self):
        series = CorrelationSeries(values=(1.0,), numerators=(1,), span=1, pair=("a", "a"))
        with pytest.raises(ValueError):
            summarize(series, exclude_zero_shift=True)


class TestCorrelationMatrix:
    def test_small_matrix_shape_and_diagonal(self):
        m = correlation_matrix([17, 31, 53], stat="max")
        assert len(m.entries) == 3
        for i in range(3):
            assert m.entries[i][i].max_value == 1.0
            assert m.entries[i][i].argmax_shift == 0

    def test_symmetry_of_extremes(self):
        m = correlation_matrix([17, 31, 53, 89])
        n = len(m.primes)
        for i in range(n):
            for j in range(n):
                assert m.entries[i][j].max_value == m.entries[j][i].max_value
                assert m.entries[i][j].min_value == m.entries[j][i].min_value

    def test_exclude_zero_shift_drops_diagonal_peak(self):
        m = correlation_matrix([17, 31], exclude_zero_shift=True)
        assert m.entries[0][0].max_value < 1.0
        assert not m.zero_shift_included

    def test_single_prime_is_1x1(self):
        m = correlation_matrix([17])
        assert len(m.entries) == 1
        assert m.entries[0][0].max_value == 1.0

    def test_parallel_evaluation_is_identical(self):
        a = correlation_matrix([17, 31, 53, 89], jobs=1)
        b = correlation_matrix([17, 31, 53, 89], jobs=4)
        assert a == b

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            correlation_matrix([17, 17])
        with pytest.raises(ValueError, match="5"):
            correlation_matrix([17, 5])
        with pytest.raises(ValueError):
            correlation_matrix([])
        with pytest.raises(ValueError):
            correlation_matrix([17], stat="median")
        with pytest.raises(ValueError):
            correlation_matrix([17], jobs=0)

    def test_cell_selects_statistic(self):
        m = correlation_matrix([17, 137], stat="max")
        num, span = m.cell(0, 1)
        assert (num, span) == (20, 64)
        m = correlation_matrix([17, 137], stat="min")
        num, span = m.cell(0, 1)
        assert num / span == m.entries[0][1].min_value
