"""Reciprocal digit sequences and their binary mappings.

A decimal sequence is one period of the base-10 expansion of 1/p.  It can
be mapped to bits digit-by-digit (4-bit equal-length or minimal-length
encoding), or the expansion can be done directly in base 2.  Two
independent generation routes exist on purpose: the modular formula
(`decimal_digits`) and schoolbook long division (`decimal_digits_oracle`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .numtheory import DSeqPrime, as_dseq_prime, multiplicative_order


class MappingKind(str, Enum):
    """How a bit sequence was obtained from 1/p."""

    DIRECT_BASE2 = "direct"
    EQUAL4 = "equal4"
    SHORTEST = "shortest"


@dataclass(frozen=True)
class DecimalSequence:
    """One period of the repeating base-10 digits of 1/p."""

    p: DSeqPrime
    digits: tuple[int, ...]
    period: int

    def __post_init__(self) -> None:
        if len(self.digits) != self.period or self.period < 1:
            raise ValueError("digit count must equal the period")
        if any(d < 0 or d > 9 for d in self.digits):
            raise ValueError("digits must lie in 0..9")

    def as_string(self) -> str:
        return "".join(map(str, self.digits))


@dataclass(frozen=True)
class BitSequence:
    """A binary sequence with its mapping provenance and structural period.

    The structural period is the length implied by construction (e.g.
    4 x decimal period for the equal-length mapping); the minimal cyclic
    period may be a proper divisor of it.
    """

    bits: tuple[int, ...]
    structural_period: int
    mapping: MappingKind
    source_prime: DSeqPrime

    def __post_init__(self) -> None:
        if len(self.bits) != self.structural_period or self.structural_period < 1:
            raise ValueError("bit count must equal the structural period")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    def as_string(self) -> str:
        return "".join(map(str, self.bits))


def decimal_digits(p: int | DSeqPrime) -> DecimalSequence:
    """Digits of 1/p via the modular formula: digit i = m * (10^i mod p) mod 10.

    The remainder is stepped iteratively (r <- 10*r mod p) for one full
    period ord_p(10).
    """
    prime = as_dseq_prime(p)
    if prime.digit_multiplier is None:
        raise ValueError(f"p={prime.p} has no repeating decimal expansion")
    m = prime.digit_multiplier
    period = multiplicative_order(10, prime)
    digits = []
    r = 1
    for _ in range(period):
        r = 10 * r % prime.p
        digits.append(m * r % 10)
    return DecimalSequence(prime, tuple(digits), period)


def decimal_digits_oracle(p: int | DSeqPrime) -> DecimalSequence:
    """Digits of 1/p by schoolbook long division, no modular shortcuts.

    Runs until the remainder repeats (the initial remainder 1 recurs
    exactly once per period).  Independent check for `decimal_digits`.
    """
    prime = as_dseq_prime(p)
    if prime.digit_multiplier is None:
        raise ValueError(f"p={prime.p} has no repeating decimal expansion")
    digits = []
    r = 1
    while True:
        r *= 10
        digits.append(r // prime.p)
        r %= prime.p
        if r == 1:
            return DecimalSequence(prime, tuple(digits), len(digits))


def binary_dseq(p: int | DSeqPrime) -> BitSequence:
    """Direct base-2 expansion of 1/p: bit i = (2^i mod p) mod 2, one period."""
    prime = as_dseq_prime(p)
    period = multiplicative_order(2, prime)
    bits = []
    r = 1
    for _ in range(period):
        r = 2 * r % prime.p
        bits.append(r % 2)
    return BitSequence(tuple(bits), period, MappingKind.DIRECT_BASE2, prime)


def equal4_bits(digits: Iterable[int]) -> tuple[int, ...]:
    """Each digit as exactly 4 bits, most significant first (0 -> 0000, 9 -> 1001)."""
    out: list[int] = []
    for d in digits:
        out.extend((d >> 3 & 1, d >> 2 & 1, d >> 1 & 1, d & 1))
    return tuple(out)


def shortest_bits(digits: Iterable[int]) -> tuple[int, ...]:
    """Each digit in its minimal binary form, no leading zeros (0 -> 0, 9 -> 1001)."""
    out: list[int] = []
    for d in digits:
        out.extend(int(c) for c in format(d, "b"))
    return tuple(out)


def map_equal4(d: DecimalSequence) -> BitSequence:
    """Equal-length mapping; structural period is 4 x the decimal period."""
    bits = equal4_bits(d.digits)
    return BitSequence(bits, len(bits), MappingKind.EQUAL4, d.p)


def map_shortest(d: DecimalSequence) -> BitSequence:
    """Minimal-length mapping; structural period is the sum of digit bit-lengths."""
    bits = shortest_bits(d.digits)
    return BitSequence(bits, len(bits), MappingKind.SHORTEST, d.p)


def _bit_tuple(b: BitSequence | Sequence[int]) -> tuple[int, ...]:
    bits = tuple(b.bits if isinstance(b, BitSequence) else b)
    if any(bit not in (0, 1) for bit in bits):
        raise ValueError("bits must be 0 or 1")
    return bits


def to_bipolar(b: BitSequence | Sequence[int]) -> list[int]:
    """Map bits elementwise to the +/-1 alphabet: 0 -> -1, 1 -> +1."""
    return [2 * bit - 1 for bit in _bit_tuple(b)]


def minimal_period(b: BitSequence | Sequence[int]) -> int:
    """Smallest t dividing the length such that the sequence is t-periodic."""
    bits = _bit_tuple(b)
    n = len(bits)
    for t in range(1, n):
        if n % t == 0 and all(bits[i] == bits[i - t] for i in range(t, n)):
            return t
    return n


def format_bitstring(b: BitSequence | Sequence[int]) -> str:
    """One ASCII line of '0'/'1' characters, newline-terminated."""
    return "".join(map(str, _bit_tuple(b))) + "\n"


def parse_bitstring(text: str) -> tuple[int, ...]:
    """Inverse of `format_bitstring`; rejects empty or non-binary input."""
    line = text.strip()
    if not line or set(line) - {"0", "1"}:
        raise ValueError("bitstring must be a non-empty line of '0'/'1' characters")
    return tuple(int(c) for c in line)
