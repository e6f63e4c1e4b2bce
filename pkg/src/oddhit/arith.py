"""Scalar arithmetic over Z/p: p-adic digits, Lucas binomials, primitive roots."""
from __future__ import annotations

from math import comb


class PrimeError(ValueError):
    """Raised when a modulus is not a prime."""


class EvenPrimeError(PrimeError):
    """Raised for p = 2, which the odd-prime degree conventions exclude."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p) -> int:
    """Validate an odd prime modulus and return it as an int."""
    if isinstance(p, bool) or int(p) != p:
        raise PrimeError(f"modulus must be an integer, got {p!r}")
    p = int(p)
    if p == 2:
        raise EvenPrimeError("p = 2 is not supported; odd primes only")
    if not _is_prime(p):
        raise PrimeError(f"{p} is not prime")
    return p


def p_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n, least significant first. ``p_digits(0, p) == [0]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [0]
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def digit(n: int, s: int, p: int) -> int:
    """The s-th base-p digit of n (zero past the top)."""
    return (n // p**s) % p


def digit_sum(n: int, p: int) -> int:
    return sum(p_digits(n, p))


def lucas_binom(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p as a product of digitwise binomials."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    out = 1
    while k:
        n, a = divmod(n, p)
        k, b = divmod(k, p)
        if b > a:
            return 0
        out = out * comb(a, b) % p
    return out


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/p)^* that is at least 2 (1 for p = 2 excluded)."""
    p = check_prime(p)
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root found mod {p}")  # unreachable for primes


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, -1, p)
