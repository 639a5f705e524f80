import math
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from abcensus.arith import (
    Factorization,
    divisor_count,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    jordan_phi,
    lcm,
    moebius,
)
from abcensus.errors import CapExceededError, DomainError, WidthOverflowError

from conftest import brute_jordan, brute_phi

u64 = st.integers(min_value=1, max_value=2**64 - 1)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    m61 = 2**61 - 1
    assert sympy.isprime(m61)
    assert factorize(m61).factors == ((m61, 1),)


@pytest.mark.parametrize("n", [
    2**64 - 59,  # largest 64-bit prime
    (2**32 - 5) * (2**31 - 1),
    4294967291**2,
    999983 * 1000003,
    2**63,
    3**40,
    2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41 * 43 * 47,
])
def test_factorize_hard_cases(n):
    assert dict(factorize(n).factors) == sympy.factorint(n)


@given(u64)
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert math.prod(p**a for p, a in f) == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(p) for p in f.primes)


def test_factorize_deterministic():
    n = 1000000007 * 998244353
    assert factorize.__wrapped__(n) == factorize.__wrapped__(n)


def test_factorize_domain():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(WidthOverflowError):
        factorize(2**64)


def test_factorization_rejects_bad_factors():
    with pytest.raises(DomainError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(DomainError):
        Factorization(12, ((2, 1), (3, 1)))


@given(st.integers(min_value=0, max_value=10**6))
def test_is_prime_matches_sympy_small(n):
    assert is_prime(n) == sympy.isprime(n)


@given(u64)
def test_is_prime_matches_sympy_64bit(n):
    assert is_prime(n) == sympy.isprime(n)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert len(divisors(2310)) == len([d for d in range(1, 2311) if 2310 % d == 0]) == 32


@given(st.integers(min_value=1, max_value=5000))
def test_divisors_match_scan(n):
    ds = divisors(n)
    assert ds == [d for d in range(1, n + 1) if n % d == 0]
    assert len(ds) == divisor_count(n)


def test_divisors_cap():
    with pytest.raises(CapExceededError) as err:
        divisors(720720, cap=100)
    assert err.value.size == 240


def test_gcd_lcm():
    assert gcd(12, 18) == 6
    assert gcd(0, 7) == 7
    assert lcm([4, 6, 10]) == 60
    assert lcm([17]) == 17
    with pytest.raises(DomainError):
        lcm([])


def test_moebius_examples():
    assert [moebius(n) for n in (1, 6, 30, 12)] == [1, 1, -1, 0]


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == brute_phi(12) == 4
    assert euler_phi(2**61 - 1) == 2**61 - 2


def test_jordan_examples():
    assert jordan_phi(2, 2) == brute_jordan(2, 2) == 3
    assert jordan_phi(2, 6) == brute_jordan(2, 6) == 24
    for n in range(1, 200):
        assert jordan_phi(1, n) == euler_phi(n)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_jordan_counts_coprime_tuples(r):
    for n in range(1, 13 if r < 3 else 9):
        assert jordan_phi(r, n) == brute_jordan(r, n)


def test_accepts_precomputed_factorization():
    f = factorize(360)
    assert moebius(f) == moebius(360)
    assert euler_phi(f) == euler_phi(360)
    assert jordan_phi(3, f) == jordan_phi(3, 360)


def test_divisor_sum_identities():
    for n in range(1, 10**4 + 1):
        ds = divisors(n)
        assert sum(euler_phi(d) for d in ds) == n
        assert sum(moebius(d) for d in ds) == (n == 1)


def test_phi_brute_force_small():
    assert [euler_phi(n) for n in range(1, 300)] == [brute_phi(n) for n in range(1, 300)]


def test_multiplicative_on_random_coprime_pairs():
    rng = random.Random(7)
    checked = 0
    while checked < 500:
        a, b = rng.randint(1, 10**6), rng.randint(1, 10**6)
        if math.gcd(a, b) != 1:
            continue
        checked += 1
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
        for r in (2, 3, 4):
            assert jordan_phi(r, a * b) == jordan_phi(r, a) * jordan_phi(r, b)


def test_phi_gcd_lcm_identity():
    for d1 in range(1, 301):
        for d2 in range(1, 301):
            g = math.gcd(d1, d2)
            assert euler_phi(d1) * euler_phi(d2) == euler_phi(g) * euler_phi(d1 * d2 // g)
