"""Identity suites: each yields one PropertyReport per checked equality.

Suites are deterministic for a given seed.  They back both ``abcensus
verify`` and the acceptance tests.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator, Union

from . import config
from .arith import divisors, factorize, is_prime, jordan_phi
from .oracle import (
    oracle_all_subgroups_rank2,
    oracle_cyclic_subgroups,
    oracle_spectrum,
    oracle_spectrum_factored,
)
from .spectra import (
    GroupSpec,
    PGroupType,
    average_order,
    cyclic_count_pgroup_type,
    cyclic_count_prime_power,
    cyclic_total,
    cyclic_total_rank2,
    full_spectrum,
    lcm_convolution_spectrum,
    order_count_lcm_convolution,
    order_count_moebius,
    primary_decomposition,
    split_divisor,
    subgroup_total_rank2,
    von_sterneck,
)

Exact = Union[int, Fraction]


@dataclass(frozen=True)
class PropertyReport:
    identity: str
    input: str
    lhs: Exact
    rhs: Exact

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.identity} [{self.input}] lhs={self.lhs} rhs={self.rhs}"


Reports = Iterator[PropertyReport]


def enumerate_specs(max_n: int, max_r: int, max_order: int) -> Iterator[GroupSpec]:
    """All ordered specs with 1 <= r <= max_r, n_i <= max_n and group size <= max_order."""
    for r in range(1, max_r + 1):
        for orders in product(range(1, max_n + 1), repeat=r):
            if math.prod(orders) <= max_order:
                yield GroupSpec(orders)


def random_specs(rng: random.Random, count: int, max_r: int, max_order: int) -> list[GroupSpec]:
    out = []
    while len(out) < count:
        r = rng.randint(1, max_r)
        orders = []
        budget = max_order
        for _ in range(r):
            n = rng.randint(1, budget)
            orders.append(n)
            budget //= n
        rng.shuffle(orders)
        out.append(GroupSpec(orders))
    return out


def _smooth_numbers(primes: set[int], limit: int) -> list[int]:
    return [n for n in range(1, limit + 1) if set(factorize(n).primes) <= primes]


def coprime_pairs(
    rng: random.Random, count: int, max_r: int, max_n: int
) -> list[tuple[GroupSpec, GroupSpec]]:
    """Pairs (n_i), (m_i) of equal rank with gcd(prod n_i, prod m_i) = 1."""
    primes = [p for p in range(2, max_n + 1) if is_prime(p)]
    pairs = []
    while len(pairs) < count:
        left = {p for p in primes if rng.random() < 0.5}
        right = set(primes) - left
        pool_n = _smooth_numbers(left, max_n)
        pool_m = _smooth_numbers(right, max_n)
        r = rng.randint(1, max_r)
        n = GroupSpec(rng.choice(pool_n) for _ in range(r))
        m = GroupSpec(rng.choice(pool_m) for _ in range(r))
        pairs.append((n, m))
    return pairs


def forms_agree(max_n: int = 30, max_r: int = 3, max_order: int = 20000) -> Reports:
    """Moebius form vs lcm-convolution form of o_delta, for every delta."""
    for spec in enumerate_specs(max_n, max_r, max_order):
        conv = lcm_convolution_spectrum(spec)
        for delta in divisors(spec.exponent):
            yield PropertyReport(
                "o_delta moebius = lcm convolution",
                f"{spec} delta={delta}",
                order_count_moebius(spec, delta),
                conv[delta],
            )


def forms_agree_single(spec: GroupSpec) -> Reports:
    """Same identity through the one-delta entry point of the convolution form."""
    for delta in divisors(spec.exponent):
        yield PropertyReport(
            "o_delta moebius = lcm convolution",
            f"{spec} delta={delta}",
            order_count_moebius(spec, delta),
            order_count_lcm_convolution(spec, delta),
        )


def check_against_oracle(spec: GroupSpec) -> Reports:
    spectrum = full_spectrum(spec)
    swept = oracle_spectrum(spec)
    census = oracle_cyclic_subgroups(spec)
    for delta in spectrum.entries:
        yield PropertyReport("o_delta formula = sweep", f"{spec} delta={delta}",
                             spectrum.o(delta), swept.o(delta))
        yield PropertyReport("c_delta formula = cyclic census", f"{spec} delta={delta}",
                             spectrum.c(delta), census.by_order.get(delta, 0))
    yield PropertyReport("cyclic total = cyclic census", str(spec), cyclic_total(spec), census.total)
    yield PropertyReport("sum c_delta = cyclic total", str(spec), spectrum.cyclic_total, census.total)
    if spec.rank == 2:
        yield PropertyReport("rank-2 cyclic total = cyclic census", str(spec),
                             cyclic_total_rank2(*spec.orders), census.total)
    weighted = sum(delta * o for delta, (o, _) in swept.entries.items())
    yield PropertyReport("average order formula = swept mean", str(spec),
                         average_order(spec), Fraction(weighted, spec.size))


def oracle_suite(
    max_n: int = 20, max_r: int = 3, max_order: int = 5000, samples: int = 200, seed: int = 0
) -> Reports:
    """Formulas vs exhaustive sweeps: every small spec, then random ones with r <= max_r + 1."""
    for spec in enumerate_specs(max_n, max_r, max_order):
        yield from check_against_oracle(spec)
    rng = random.Random(seed)
    for spec in random_specs(rng, samples, max_r + 1, max_order):
        yield from check_against_oracle(spec)


def check_multiplicative(n: GroupSpec, m: GroupSpec) -> Reports:
    nm = GroupSpec(a * b for a, b in zip(n.orders, m.orders))
    label = f"{n} * {m}"
    yield PropertyReport("c multiplicative", label,
                         cyclic_total(nm), cyclic_total(n) * cyclic_total(m))
    yield PropertyReport("A multiplicative", label,
                         average_order(nm), average_order(n) * average_order(m))
    sn, sm, snm = full_spectrum(n), full_spectrum(m), full_spectrum(nm)
    for delta in snm.entries:
        a, b = split_divisor(delta, n.exponent, m.exponent)
        yield PropertyReport("c_delta multiplicative", f"{label} delta={delta}={a}*{b}",
                             snm.c(delta), sn.c(a) * sm.c(b))
    yield from check_primary(nm)


def check_primary(spec: GroupSpec) -> Reports:
    """c and c_delta of the whole group vs the product over its primary components."""
    parts = primary_decomposition(spec)
    yield PropertyReport("c = product over primary parts", str(spec),
                         cyclic_total(spec), math.prod(cyclic_total(g) for _, g in parts))
    whole = full_spectrum(spec)
    local = [(p, full_spectrum(g)) for p, g in parts]
    for delta in whole.entries:
        prod = 1
        for p, sp in local:
            pp = 1
            while delta % (pp * p) == 0:
                pp *= p
            prod *= sp.c(pp)
        yield PropertyReport("c_delta = product over primary parts", f"{spec} delta={delta}",
                             whole.c(delta), prod)


def multiplicativity(samples: int = 500, max_n: int = 30, max_r: int = 3, seed: int = 0) -> Reports:
    rng = random.Random(seed)
    for n, m in coprime_pairs(rng, samples, max_r, max_n):
        yield from check_multiplicative(n, m)


def jordan(max_n: int = 30, max_r: int = 4, max_delta: int = 200) -> Reports:
    """o_delta(n, ..., n) = phi_r(delta) for every delta | n."""
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            spec = GroupSpec((n,) * r)
            for delta in divisors(n):
                if delta <= max_delta:
                    yield PropertyReport("o_delta(n^r) = jordan phi_r", f"r={r} n={n} delta={delta}",
                                         order_count_moebius(spec, delta), jordan_phi(r, delta))


def von_sterneck_suite(max_delta: int = 200, max_r: int = 4) -> Reports:
    for r in range(1, max_r + 1):
        for delta in range(1, max_delta + 1):
            yield PropertyReport("von Sterneck = jordan phi_r", f"r={r} delta={delta}",
                                 von_sterneck(r, delta), jordan_phi(r, delta))


def pgroup_cyclic_oracle(spec: GroupSpec, oracle_cap: int | None = None) -> dict[int, int]:
    """Cyclic-subgroup counts by order from the cheapest applicable sweep."""
    cap = config.oracle_cap() if oracle_cap is None else oracle_cap
    if spec.size <= cap:
        return oracle_cyclic_subgroups(spec, cap=cap).by_order
    swept = oracle_spectrum_factored(spec, cap=cap)
    return {delta: c for delta, (_, c) in swept.entries.items()}


def pgroup_reduction(primes=(2, 3, 5), max_k: int = 4, max_lambda: int = 4) -> Reports:
    """Type formula = prime-power formula = spectrum = oracle, for every valid nu."""
    for p in primes:
        for k in range(1, max_k + 1):
            for lambdas in combinations_with_replacement(range(1, max_lambda + 1), k):
                t = PGroupType(p, lambdas)
                spec = t.to_spec()
                spectrum = full_spectrum(spec)
                counted = pgroup_cyclic_oracle(spec)
                for nu in range(1, lambdas[-1] + 1):
                    label = f"p={p} type={lambdas} nu={nu}"
                    by_type = cyclic_count_pgroup_type(t, nu)
                    yield PropertyReport("type formula = prime-power formula", label,
                                         by_type, cyclic_count_prime_power(p, lambdas[::-1], nu))
                    yield PropertyReport("type formula = spectrum c", label,
                                         by_type, spectrum.c(p**nu))
                    yield PropertyReport("type formula = oracle", label,
                                         by_type, counted.get(p**nu, 0))
                yield PropertyReport("type formula beyond exponent = 0",
                                     f"p={p} type={lambdas} nu={lambdas[-1] + 1}",
                                     cyclic_count_pgroup_type(t, lambdas[-1] + 1), 0)


def rank2(cyclic_max_n: int = 60, subgroup_max_n: int = 40, pair_cap: int | None = None) -> Reports:
    cap = config.pair_cap() if pair_cap is None else pair_cap
    for n1 in range(1, cyclic_max_n + 1):
        for n2 in range(1, cyclic_max_n + 1):
            yield PropertyReport("rank-2 gcd formula = general cyclic total", f"{n1}x{n2}",
                                 cyclic_total_rank2(n1, n2), cyclic_total(GroupSpec((n1, n2))))
    for n1 in range(1, subgroup_max_n + 1):
        for n2 in range(1, subgroup_max_n + 1):
            if n1 * n2 <= cap:
                yield PropertyReport("subgroup gcd formula = pair closure", f"{n1}x{n2}",
                                     subgroup_total_rank2(n1, n2),
                                     oracle_all_subgroups_rank2(n1, n2, cap=cap))


@dataclass(frozen=True)
class Sizes:
    max_n: int | None = None
    max_r: int | None = None
    max_order: int | None = None
    seed: int = 0


def _pick(value: int | None, default: int) -> int:
    return default if value is None else value


SUITES: dict[str, Callable[[Sizes], Reports]] = {
    "forms-agree": lambda s: forms_agree(_pick(s.max_n, 30), _pick(s.max_r, 3), _pick(s.max_order, 20000)),
    "oracle": lambda s: oracle_suite(_pick(s.max_n, 20), _pick(s.max_r, 3), _pick(s.max_order, 5000), seed=s.seed),
    "multiplicativity": lambda s: multiplicativity(max_n=_pick(s.max_n, 30), max_r=_pick(s.max_r, 3), seed=s.seed),
    "jordan": lambda s: jordan(_pick(s.max_n, 30), _pick(s.max_r, 4)),
    "von-sterneck": lambda s: von_sterneck_suite(_pick(s.max_order, 200), _pick(s.max_r, 4)),
    "pgroup-reduction": lambda s: pgroup_reduction(max_k=_pick(s.max_r, 4), max_lambda=_pick(s.max_n, 4)),
    "rank2-subgroups": lambda s: rank2(_pick(s.max_n, 60), _pick(s.max_n, 40)),
}
