"""Closed-form counts for C_{n1} x ... x C_{nr}.

The element-order spectrum has two exact forms: a Moebius sum over the
divisors of the target order (the production path) and a convolution over
the divisor grid restricted to a fixed lcm (kept as an independent
cross-check).  Cyclic-subgroup counts follow by dividing by phi(delta),
since a cyclic group of order delta has phi(delta) generators.

Everything is exact: ints for counts, ``Fraction`` for the average order.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from . import config
from .arith import (
    UINT64_LIMIT,
    Factorization,
    divisor_count,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    jordan_phi,
    lcm,
)
from .errors import (
    CapExceededError,
    DomainError,
    NonIntegralError,
    NotADivisorError,
    SpecParseError,
    WidthOverflowError,
)

__all__ = [
    "GroupSpec",
    "OrderSpectrum",
    "PGroupType",
    "parse_spec",
    "order_count_moebius",
    "order_count_lcm_convolution",
    "lcm_convolution_spectrum",
    "full_spectrum",
    "cyclic_total",
    "cyclic_total_rank2",
    "cyclic_count_prime_power",
    "cyclic_count_pgroup_type",
    "average_order",
    "von_sterneck",
    "subgroup_total_rank2",
    "split_divisor",
    "primary_decomposition",
]


@dataclass(frozen=True)
class GroupSpec:
    """The direct product of cyclic groups of the given orders, in order."""

    orders: tuple[int, ...]
    exponent: int = field(init=False, compare=False)
    size: int = field(init=False, compare=False)

    def __init__(self, orders: Iterable[int]):
        orders = tuple(orders)
        if not orders:
            raise DomainError("a group spec needs at least one cyclic factor")
        for n in orders:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise DomainError(f"cyclic orders must be integers >= 1, got {n!r}")
            if n >= UINT64_LIMIT:
                raise WidthOverflowError(f"cyclic order {n} does not fit in 64 bits")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "exponent", lcm(orders))
        object.__setattr__(self, "size", math.prod(orders))

    @property
    def rank(self) -> int:
        return len(self.orders)

    def __str__(self) -> str:
        return "x".join(map(str, self.orders))

    def __iter__(self):
        return iter(self.orders)


_SPEC_RE = re.compile(r"[0-9]+(?:x[0-9]+)*")


def parse_spec(text: str) -> GroupSpec:
    """Parse ``"4x2x3"`` into a GroupSpec.  No whitespace is accepted."""
    if not _SPEC_RE.fullmatch(text):
        raise SpecParseError(f"malformed group spec {text!r}; expected e.g. 4x2x3")
    orders = [int(part) for part in text.split("x")]
    if any(n < 1 for n in orders):
        raise SpecParseError(f"cyclic orders must be >= 1 in {text!r}")
    return GroupSpec(orders)


@dataclass(frozen=True)
class OrderSpectrum:
    """delta -> (o_delta, c_delta) for every divisor delta of the exponent."""

    spec: GroupSpec
    entries: Mapping[int, tuple[int, int]]

    def __post_init__(self) -> None:
        if list(self.entries) != sorted(self.entries):
            raise DomainError("spectrum entries must be in ascending order")
        if self.entries.get(1) != (1, 1):
            raise NonIntegralError(f"o_1/c_1 must be (1, 1), got {self.entries.get(1)}")
        for delta, (o, c) in self.entries.items():
            if o < 0 or o != c * euler_phi(delta):
                raise NonIntegralError(f"inconsistent entry at delta={delta}: o={o}, c={c}")
        if self.order_sum != self.spec.size:
            raise NonIntegralError(
                f"element orders sum to {self.order_sum}, group has {self.spec.size}"
            )

    @classmethod
    def from_order_counts(cls, spec: GroupSpec, counts: Mapping[int, int]) -> "OrderSpectrum":
        entries = {}
        for delta in sorted(counts):
            o = counts[delta]
            q, rem = divmod(o, euler_phi(delta))
            if rem:
                raise NonIntegralError(f"phi({delta}) does not divide o_delta={o}")
            entries[delta] = (o, q)
        return cls(spec, entries)

    def o(self, delta: int) -> int:
        return self.entries[delta][0]

    def c(self, delta: int) -> int:
        return self.entries[delta][1]

    @property
    def order_sum(self) -> int:
        return sum(o for o, _ in self.entries.values())

    @property
    def cyclic_total(self) -> int:
        return sum(c for _, c in self.entries.values())


@dataclass(frozen=True)
class PGroupType:
    """A p-group C_{p^l1} x ... x C_{p^lk} with 1 <= l1 <= ... <= lk."""

    p: int
    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if not self.lambdas:
            raise DomainError("a p-group type needs at least one part")
        if self.lambdas[0] < 1 or any(a > b for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise DomainError(f"type must be nondecreasing and >= 1, got {self.lambdas}")

    def to_spec(self) -> GroupSpec:
        return GroupSpec(self.p**lam for lam in self.lambdas)


def _check_delta(spec: GroupSpec, delta: int) -> None:
    if not isinstance(delta, int) or delta < 1 or spec.exponent % delta:
        raise NotADivisorError(delta, spec.exponent)


def _grid_size(orders: Iterable[int], what: str, cap: int | None) -> int:
    cap = config.convolution_cap() if cap is None else cap
    size = math.prod(divisor_count(n) for n in orders)
    if size > cap:
        raise CapExceededError(what, size, cap)
    return size


def _moebius_sum(orders: tuple[int, ...], fdelta: Factorization) -> int:
    # Only squarefree k = delta/e contribute, so walk subsets of the primes.
    delta = fdelta.value
    total = 0
    terms = [(1, 1)]
    for p in fdelta.primes:
        terms += [(k * p, -sign) for k, sign in terms]
    for k, sign in terms:
        e = delta // k
        total += sign * math.prod(math.gcd(e, n) for n in orders)
    if total < 0:
        raise NonIntegralError(f"negative element count {total} for delta={delta}")
    return total


def order_count_moebius(spec: GroupSpec, delta: int) -> int:
    """Elements of order ``delta``: sum over e | delta of mu(delta/e) * prod gcd(e, n_i)."""
    _check_delta(spec, delta)
    return _moebius_sum(spec.orders, factorize(delta))


def _lcm_fold(orders: Iterable[int], phi_of) -> dict[int, int]:
    # Groups the divisor-tuple sum by running lcm, one coordinate at a time.
    acc = {1: 1}
    for n in orders:
        step: dict[int, int] = {}
        for d in divisors(n):
            w = phi_of(d)
            for l, v in acc.items():
                key = math.lcm(l, d)
                step[key] = step.get(key, 0) + v * w
        acc = step
    return acc


def order_count_lcm_convolution(spec: GroupSpec, delta: int, cap: int | None = None) -> int:
    """Elements of order ``delta``: sum of prod phi(d_i) over d_i | n_i with lcm = delta."""
    _check_delta(spec, delta)
    restricted = [math.gcd(n, delta) for n in spec.orders]
    _grid_size(restricted, f"lcm convolution over {spec}", cap)
    return _lcm_fold(restricted, euler_phi).get(delta, 0)


def lcm_convolution_spectrum(spec: GroupSpec, cap: int | None = None) -> dict[int, int]:
    """All o_delta at once via the lcm-grouped divisor convolution."""
    _grid_size(spec.orders, f"lcm convolution over {spec}", cap)
    folded = _lcm_fold(spec.orders, euler_phi)
    return {delta: folded.get(delta, 0) for delta in divisors(spec.exponent)}


def full_spectrum(spec: GroupSpec, cap: int | None = None) -> OrderSpectrum:
    cap = config.spectrum_cap() if cap is None else cap
    fexp = factorize(spec.exponent)
    count = divisor_count(fexp)
    if count > cap:
        raise CapExceededError(f"divisors of exponent {spec.exponent}", count, cap)
    counts = {delta: _moebius_sum(spec.orders, factorize(delta)) for delta in divisors(fexp)}
    return OrderSpectrum.from_order_counts(spec, counts)


def cyclic_total(spec: GroupSpec, cap: int | None = None) -> int:
    """Number of cyclic subgroups, summed termwise over the full divisor grid.

    Each term phi(d1)...phi(dr) / phi(lcm) is taken as an exact rational.
    Terms are expected to be integral; a fractional term is tolerated only
    if the grand total still comes out an integer.
    """
    _grid_size(spec.orders, f"cyclic total over {spec}", cap)
    grids = [[(d, euler_phi(d)) for d in divisors(n)] for n in spec.orders]
    whole = 0
    frac = Fraction(0)
    for combo in product(*grids):
        num = 1
        l = 1
        for d, ph in combo:
            num *= ph
            l = math.lcm(l, d)
        q, rem = divmod(num, euler_phi(l))
        whole += q
        if rem:
            frac += Fraction(rem, euler_phi(l))
    if frac.denominator != 1:
        raise NonIntegralError(f"cyclic total of {spec} is not an integer: {whole + frac}")
    return whole + int(frac)


def cyclic_total_rank2(n1: int, n2: int, cap: int | None = None) -> int:
    """Cyclic subgroups of C_n1 x C_n2 as a double sum of phi(gcd(d1, d2))."""
    spec = GroupSpec((n1, n2))
    _grid_size(spec.orders, f"rank-2 cyclic total over {spec}", cap)
    return sum(euler_phi(math.gcd(d1, d2)) for d1 in divisors(n1) for d2 in divisors(n2))


def subgroup_total_rank2(n1: int, n2: int, cap: int | None = None) -> int:
    """All subgroups of C_n1 x C_n2 as a double sum of gcd(d1, d2)."""
    spec = GroupSpec((n1, n2))
    _grid_size(spec.orders, f"rank-2 subgroup total over {spec}", cap)
    return sum(math.gcd(d1, d2) for d1 in divisors(n1) for d2 in divisors(n2))


def cyclic_count_prime_power(p: int, exponents: Iterable[int], nu: int) -> int:
    """Cyclic subgroups of order p**nu in C_{p^a1} x ... x C_{p^ar}."""
    exponents = tuple(exponents)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not exponents or min(exponents) < 1:
        raise DomainError(f"exponents must be nonempty and >= 1, got {exponents}")
    if not 1 <= nu <= max(exponents):
        raise DomainError(f"nu={nu} outside 1..{max(exponents)}")
    upper = p ** sum(min(nu, a) for a in exponents)
    lower = p ** sum(min(nu - 1, a) for a in exponents)
    q, rem = divmod(upper - lower, p ** (nu - 1) * (p - 1))
    if rem:
        raise NonIntegralError(f"prime-power count for p={p}, {exponents}, nu={nu} is fractional")
    return q


def cyclic_count_pgroup_type(t: PGroupType, nu: int) -> int:
    """Cyclic subgroups of order p**nu in a p-group of type ``t.lambdas``.

    ``j`` is the number of parts strictly below ``nu``, i.e. the index with
    lambda_j < nu <= lambda_{j+1} once lambda_0 = 0 is prepended.  Orders
    beyond the largest part have no elements, so the count is 0.
    """
    if nu < 1:
        raise DomainError(f"nu must be >= 1, got {nu}")
    lam = (0,) + t.lambdas
    k = len(t.lambdas)
    if nu > lam[k]:
        return 0
    j = max(i for i in range(k + 1) if lam[i] < nu)
    p = t.p
    head = (p ** (k - j) - 1) // (p - 1)
    return head * p ** (sum(lam[: j + 1]) + (k - j - 1) * (nu - 1))


def average_order(spec: GroupSpec, cap: int | None = None) -> Fraction:
    """Mean element order, as a reduced fraction."""
    _grid_size(spec.orders, f"average order over {spec}", cap)
    folded = _lcm_fold(spec.orders, euler_phi)
    return Fraction(sum(l * w for l, w in folded.items()), spec.size)


def von_sterneck(r: int, delta: int, cap: int | None = None) -> int:
    """Sum of phi(d1)...phi(dr) over ordered r-tuples of divisors with lcm = delta."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    cap = config.convolution_cap() if cap is None else cap
    divs = [(d, euler_phi(d)) for d in divisors(delta)]
    size = len(divs) ** r
    if size > cap:
        raise CapExceededError(f"von Sterneck sum r={r}, delta={delta}", size, cap)

    def walk(depth: int, l: int, w: int) -> int:
        if depth == r:
            return w if l == delta else 0
        return sum(walk(depth + 1, math.lcm(l, d), w * ph) for d, ph in divs)

    return walk(0, 1, 1)


def split_divisor(delta: int, n: int, m: int) -> tuple[int, int]:
    """Write delta = a*b with a | n, b | m, for coprime n and m."""
    if math.gcd(n, m) != 1:
        raise DomainError(f"split needs coprime n, m; gcd({n}, {m}) = {math.gcd(n, m)}")
    a = math.gcd(delta, n)
    b = delta // a
    if delta % a or m % b:
        raise DomainError(f"{delta} is not a divisor a*b with a | {n}, b | {m}")
    return a, b


def primary_decomposition(spec: GroupSpec) -> list[tuple[int, GroupSpec]]:
    """Split each cyclic factor into prime-power parts, grouped by prime."""
    out = []
    for p, _ in factorize(spec.size):
        parts = []
        for n in spec.orders:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            parts.append(p**a)
        out.append((p, GroupSpec(parts)))
    return out
