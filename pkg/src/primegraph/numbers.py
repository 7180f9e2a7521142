"""Small number-theory helpers: primality, factorisation, p-parts."""

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for desk-scale orders."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Ascending tuple of distinct prime divisors of n (empty for n <= 1)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def is_p_power(n: int, p: int) -> bool:
    """True if n is a (possibly zeroth) power of the prime p."""
    while n % p == 0:
        n //= p
    return n == 1


def multiplicative_order(k: int, n: int) -> int:
    """Order of k modulo n; requires gcd(k, n) = 1."""
    if math.gcd(k, n) != 1:
        raise ValueError(f"{k} is not a unit modulo {n}")
    m, x = 1, k % n
    while x != 1:
        x = (x * k) % n
        m += 1
    return m
