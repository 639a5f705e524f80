"""Exact elementary number theory on 64-bit naturals.

Factorization uses trial division over a 2-3-5 wheel, then Brent's variant
of Pollard rho with a fixed seed, backed by a Miller-Rabin test whose base
set is deterministic for every n < 2**64.  All results are Python ints, so
products of gcds and r-th powers never wrap.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import accumulate, cycle
from typing import Iterable, Union

from .config import DIVISOR_CAP
from .errors import CapExceededError, DomainError, WidthOverflowError

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "divisors",
    "divisor_count",
    "gcd",
    "lcm",
    "moebius",
    "euler_phi",
    "jordan_phi",
]

UINT64_LIMIT = 1 << 64

# Trial division runs up to this bound before switching to rho.
_TRIAL_BOUND = 1000
# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between residues coprime to 30, from 7
_RHO_SEED = 0x5EED


@dataclass(frozen=True)
class Factorization:
    """``value`` as ascending ``(prime, exponent)`` pairs; empty for 1."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1:
                raise DomainError(f"malformed factorization {self.factors!r}")
            last = p
            prod *= p**a
        if prod != self.value:
            raise DomainError(f"factors {self.factors!r} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


IntOrFactorization = Union[int, Factorization]


def _check_natural(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    if n >= UINT64_LIMIT:
        raise WidthOverflowError(f"{name}={n} does not fit in 64 bits")


def is_prime(n: int) -> bool:
    """Deterministic for all n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, rng: random.Random, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


def _wheel():
    yield from (2, 3, 5)
    yield from accumulate(cycle(_WHEEL_STEPS), initial=7)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    _check_natural(n)
    found: dict[int, int] = {}
    m = n
    for p in _wheel():
        if p > _TRIAL_BOUND or p * p > m:
            break
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            found[p] = a
    if m > 1:
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            # no factor below min(sqrt(m), bound) left, so m is prime
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, random.Random(_RHO_SEED), found)
    return Factorization(n, tuple(sorted(found.items())))


def _as_factorization(n: IntOrFactorization) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def divisor_count(n: IntOrFactorization) -> int:
    f = _as_factorization(n)
    return math.prod(a + 1 for _, a in f)


def divisors(n: IntOrFactorization, cap: int = DIVISOR_CAP) -> list[int]:
    """All divisors of ``n`` in ascending order."""
    f = _as_factorization(n)
    count = divisor_count(f)
    if count > cap:
        raise CapExceededError(f"divisors of {f.value}", count, cap)
    return list(_divisors_cached(f))


@lru_cache(maxsize=1 << 14)
def _divisors_cached(f: Factorization) -> tuple[int, ...]:
    divs = [1]
    for p, a in f:
        divs = [d * p**k for d in divs for k in range(a + 1)]
    return tuple(sorted(divs))


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(values: Iterable[int]) -> int:
    """Least common multiple of a nonempty collection."""
    values = list(values)
    if not values:
        raise DomainError("lcm of an empty list")
    return reduce(math.lcm, values)


def moebius(n: IntOrFactorization) -> int:
    f = _as_factorization(n)
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: IntOrFactorization) -> int:
    f = _as_factorization(n)
    return math.prod((p - 1) * p ** (a - 1) for p, a in f)


def jordan_phi(r: int, n: IntOrFactorization) -> int:
    """Jordan totient: n**r * prod over p | n of (1 - p**-r), exactly."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    f = _as_factorization(n)
    return math.prod((p**r - 1) * p ** (r * (a - 1)) for p, a in f)
