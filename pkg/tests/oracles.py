"""Independent reference implementations used only by the tests.

These deliberately avoid the shortcuts the library takes (modular
exponentiation, divisor enumeration, residue folding) so that agreement
is meaningful.
"""

import math


def longdiv_digits(p, base=10):
    """Schoolbook long division of 1/p: digits until the remainder repeats."""
    digits = []
    r = 1
    while True:
        r *= base
        digits.append(r // p)
        r %= p
        if r == 1:
            return digits


def brute_force_order(base, p):
    """Order of base mod p by stepping t = 1, 2, ... up to p-1."""
    x = base % p
    t = 1
    while x != 1:
        x = x * base % p
        t += 1
    return t


def slow_pow_mod(base, exponent, modulus):
    """Repeated multiplication, no square-and-multiply."""
    r = 1 % modulus
    for _ in range(exponent):
        r = r * base % modulus
    return r


def trial_division_is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def sieve_primes(limit):
    flags = [True] * limit
    flags[0:2] = [False, False]
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return [i for i, f in enumerate(flags) if f]


def naive_cross_sums(a, b):
    """Direct double loop over the full lcm span; exact integers."""
    n1, n2 = len(a), len(b)
    q = math.lcm(n1, n2)
    out = []
    for k in range(q):
        acc = 0
        for j in range(q):
            acc += a[j % n1] * b[(j + k) % n2]
        out.append(acc)
    return out


def naive_auto_sums(s):
    n = len(s)
    return [sum(s[j] * s[(j + k) % n] for j in range(n)) for k in range(n)]
