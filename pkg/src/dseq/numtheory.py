"""Exact integer arithmetic for reciprocal-of-prime sequence generation.

Everything here is pure integer math; no floating point enters digit or
period computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# m such that m * last_digit == 9 (mod 10); one case per admissible last digit.
_MULTIPLIER_BY_LAST_DIGIT = {1: 9, 3: 3, 7: 7, 9: 1}

# Deterministic Miller-Rabin witness set, exact for all n < 3.3e24
# (covers the full 64-bit range with a wide margin).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial pre-check + fixed-witness Miller-Rabin)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus for non-negative base and exponent."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if base < 0:
        raise ValueError(f"base must be non-negative, got {base}")
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    return pow(base, exponent, modulus)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError(f"lcm arguments must be positive, got ({a}, {b})")
    return math.lcm(a, b)


def digit_multiplier(p: int) -> int:
    """Decimal generator constant for prime p: 9, 3, 7, 1 for last digit 1, 3, 7, 9."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    last = p % 10
    if last not in _MULTIPLIER_BY_LAST_DIGIT:
        raise ValueError(
            f"p={p} has no decimal generator constant: 10 is not invertible mod {p}"
        )
    return _MULTIPLIER_BY_LAST_DIGIT[last]


@dataclass(frozen=True)
class DSeqPrime:
    """A validated odd prime carrying its decimal generator constant.

    ``digit_multiplier`` is None only for p=5, which admits a base-2
    expansion but no repeating base-10 one.  p=2 is rejected outright
    (degenerate in both bases).
    """

    p: int
    digit_multiplier: int | None = field(init=False, default=None)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p == 2:
            raise ValueError("p=2 is not supported: 1/2 terminates in base 2 and base 10")
        if self.p != 5:
            object.__setattr__(
                self, "digit_multiplier", _MULTIPLIER_BY_LAST_DIGIT[self.p % 10]
            )

    def __str__(self) -> str:
        return str(self.p)


def as_dseq_prime(p: int | DSeqPrime) -> DSeqPrime:
    """Coerce an int to a validated DSeqPrime (no-op if already one)."""
    return p if isinstance(p, DSeqPrime) else DSeqPrime(p)


def _divisors_ascending(n: int) -> list[int]:
    """All divisors of n >= 1 in increasing order."""
    factors: dict[int, int] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors[f] = factors.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**k for d in divs for k in range(mult + 1)]
    return sorted(divs)


def multiplicative_order(base: int, p: int | DSeqPrime) -> int:
    """Smallest t > 0 with base**t == 1 (mod p), for prime p coprime to base.

    Enumerates divisors of p-1 in increasing order; the first that maps
    base to 1 is the order (every order divides p-1).
    """
    modulus = p.p if isinstance(p, DSeqPrime) else p
    if not is_prime(modulus):
        raise ValueError(f"{modulus} is not prime")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if base % modulus == 0:
        raise ValueError(f"base {base} and modulus {modulus} are not coprime")
    for d in _divisors_ascending(modulus - 1):
        if pow(base, d, modulus) == 1:
            return d
    raise AssertionError("unreachable: order divides p-1 for prime p")
