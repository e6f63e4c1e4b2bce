import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhit.arith import (EvenPrimeError, PrimeError, check_prime, digit, digit_sum, inv_mod,
                          lucas_binom, p_digits, primitive_root)

PRIMES = [3, 5, 7, 11, 13]


@pytest.mark.parametrize("n,p,want", [(10, 3, [1, 0, 1]), (0, 5, [0]), (65, 3, [2, 0, 1, 2])])
def test_p_digits_examples(n, p, want):
    assert p_digits(n, p) == want


@given(st.integers(0, 10**6), st.sampled_from(PRIMES))
def test_p_digits_round_trip(n, p):
    ds = p_digits(n, p)
    assert sum(d * p**s for s, d in enumerate(ds)) == n
    assert all(0 <= d < p for d in ds)
    assert n == 0 or ds[-1] != 0


def test_lucas_examples():
    assert lucas_binom(5, 3, 3) == 1
    assert lucas_binom(7, 5, 3) == 0
    assert lucas_binom(4, 7, 3) == 0
    for p in PRIMES:
        assert lucas_binom(17, 0, p) == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lucas_matches_exact_binomial(p):
    for n in range(500):
        for k in range(0, n + 1, 1 if n < 120 else 7):
            assert lucas_binom(n, k, p) == math.comb(n, k) % p


@given(st.integers(0, 5000), st.integers(0, 6), st.sampled_from([3, 5, 7]))
def test_lucas_at_prime_power_is_digit(n, s, p):
    assert lucas_binom(n, p**s, p) == digit(n, s, p)


def test_digit_sum():
    assert digit_sum(12, 3) == 2
    assert digit_sum(0, 5) == 0
    # 8 = 2 + 2*3: digits [2, 2]
    assert digit_sum(8, 3) == sum(p_digits(8, 3)) == 4


@pytest.mark.parametrize("p,g", [(3, 2), (5, 2), (7, 3), (13, 2), (23, 5)])
def test_primitive_root_smallest(p, g):
    assert primitive_root(p) == g
    assert sorted(pow(g, k, p) for k in range(p - 1)) == list(range(1, p))
    for c in range(2, g):  # every smaller candidate has a short order
        assert len({pow(c, k, p) for k in range(p - 1)}) < p - 1


def test_check_prime_rejects():
    with pytest.raises(EvenPrimeError):
        check_prime(2)
    with pytest.raises(PrimeError):
        check_prime(9)
    with pytest.raises(PrimeError):
        check_prime(1)
    assert check_prime(7) == 7


@settings(max_examples=50)
@given(st.sampled_from(PRIMES), st.integers(1, 10**4))
def test_inv_mod(p, a):
    if a % p:
        assert a * inv_mod(a, p) % p == 1
