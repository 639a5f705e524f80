"""Brute-force ground truth for small direct products of cyclic groups.

Nothing here uses a Moebius sum, a totient product or any other counting
formula: elements are swept exhaustively and subgroups are built by closure
under addition.  The only totient use is turning o_delta into c_delta,
after divisibility has been checked.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable

import numpy as np

from . import config, kernels
from .errors import CapExceededError, DomainError
from .spectra import GroupSpec, OrderSpectrum

__all__ = [
    "Element",
    "all_elements",
    "CanonicalSubgroup",
    "CyclicCensus",
    "element_order",
    "generated_subgroup",
    "oracle_spectrum",
    "oracle_spectrum_factored",
    "oracle_cyclic_subgroups",
    "oracle_all_subgroups_rank2",
]


@dataclass(frozen=True)
class Element:
    """x = (x1**i1, ..., xr**ir) with 1 <= i_k <= n_k; (n1, ..., nr) is the identity."""

    spec: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.spec.rank:
            raise DomainError(f"{len(self.coords)} coordinates for a rank-{self.spec.rank} group")
        for i, n in zip(self.coords, self.spec.orders):
            if not 1 <= i <= n:
                raise DomainError(f"coordinate {i} outside 1..{n}")

    @classmethod
    def from_residues(cls, spec: GroupSpec, residues: Iterable[int]) -> "Element":
        return cls(spec, tuple((i - 1) % n + 1 for i, n in zip(residues, spec.orders)))

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(i % n for i, n in zip(self.coords, self.spec.orders))


def element_order(e: Element) -> int:
    """o(x) computed two ways, which must agree."""
    orders = e.spec.orders
    n = e.spec.exponent
    via_gcd = n // math.gcd(n, *(i * (n // nk) for i, nk in zip(e.coords, orders)))
    via_lcm = math.lcm(*(nk // math.gcd(nk, i) for i, nk in zip(e.coords, orders)))
    if via_gcd != via_lcm:
        raise AssertionError(f"order forms disagree at {e.coords}: {via_gcd} != {via_lcm}")
    return via_gcd


@dataclass(frozen=True)
class CanonicalSubgroup:
    """A subgroup as the sorted tuple of its members' residue tuples."""

    spec: GroupSpec
    elements: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        members = set(self.elements)
        identity = (0,) * self.spec.rank
        if identity not in members:
            raise AssertionError("subgroup is missing the identity")
        for a in self.elements:
            neg = tuple(-x % n for x, n in zip(a, self.spec.orders))
            if neg not in members:
                raise AssertionError(f"subgroup is not closed under inverses at {a}")
        if self.spec.size % len(self.elements):
            raise AssertionError(f"subgroup of size {len(self.elements)} violates Lagrange")

    @property
    def order(self) -> int:
        return len(self.elements)


def generated_subgroup(spec: GroupSpec, gens: Iterable[Iterable[int]]) -> CanonicalSubgroup:
    """Closure of ``gens`` (residue tuples) under componentwise addition."""
    orders = spec.orders
    gens = [tuple(g % n for g, n in zip(gen, orders)) for gen in gens]
    seen = {(0,) * spec.rank}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple((x + y) % n for x, y, n in zip(a, g, orders))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return CanonicalSubgroup(spec, tuple(sorted(seen)))


def _check_size(spec: GroupSpec, cap: int | None) -> np.ndarray:
    cap = config.oracle_cap() if cap is None else cap
    if spec.size > cap:
        raise CapExceededError(f"oracle sweep of {spec}", spec.size, cap)
    return np.array(spec.orders, dtype=np.int64)


def oracle_spectrum(spec: GroupSpec, cap: int | None = None, check_forms: bool = True) -> OrderSpectrum:
    """Order spectrum by sweeping every element of the group."""
    orders = _check_size(spec, cap)
    elem_orders = kernels.element_orders_gcd(orders)
    if check_forms and not np.array_equal(elem_orders, kernels.element_orders_lcm(orders)):
        raise AssertionError(f"element order forms disagree on {spec}")
    hist = np.bincount(elem_orders)
    counts = {int(d): int(hist[d]) for d in np.flatnonzero(hist)}
    for d in range(1, spec.exponent + 1):
        if spec.exponent % d == 0:
            counts.setdefault(d, 0)
    return OrderSpectrum.from_order_counts(spec, counts)


def oracle_spectrum_factored(spec: GroupSpec, cap: int | None = None) -> OrderSpectrum:
    """Order spectrum from per-factor sweeps.

    Each C_{n_k} is swept on its own by repeated addition; the histograms
    are combined by counting, using o(x) = lcm of the component orders.
    This reaches groups far too large to sweep whole.
    """
    cap = config.oracle_cap() if cap is None else cap
    acc: Counter[int] = Counter({1: 1})
    for n in spec.orders:
        if n > cap:
            raise CapExceededError(f"factor sweep of C_{n}", n, cap)
        local = Counter(int(o) for o in kernels.element_orders_walk(np.array([n], dtype=np.int64)))
        step: Counter[int] = Counter()
        for a, ca in acc.items():
            for b, cb in local.items():
                step[math.lcm(a, b)] += ca * cb
        acc = step
    return OrderSpectrum.from_order_counts(spec, dict(acc))


@dataclass(frozen=True)
class CyclicCensus:
    by_order: dict[int, int]
    total: int


def oracle_cyclic_subgroups(spec: GroupSpec, cap: int | None = None) -> CyclicCensus:
    """Count cyclic subgroups by generating <x> for every element and deduplicating."""
    orders = _check_size(spec, cap)
    elem_orders = kernels.element_orders_gcd(orders)
    gens = kernels.cyclic_generators(orders, elem_orders)
    seen: set[tuple[int, ...]] = set()
    by_order: Counter[int] = Counter()
    for g in gens:
        members = tuple(sorted(int(y) for y in kernels.cyclic_members(orders, g)))
        if members in seen:
            raise AssertionError(f"cyclic subgroup generated twice in {spec}")
        if spec.size % len(members):
            raise AssertionError(f"cyclic subgroup of size {len(members)} violates Lagrange")
        seen.add(members)
        by_order[len(members)] += 1
    census = dict(sorted(by_order.items()))
    return CyclicCensus(census, sum(census.values()))


def oracle_all_subgroups_rank2(n1: int, n2: int, cap: int | None = None) -> int:
    """Count all subgroups of C_n1 x C_n2.

    Every subgroup of a group of rank at most 2 is generated by two
    elements, and by two cyclic subgroups; joins of all pairs of cyclic
    subgroups are built by closure and deduplicated by membership bitset.
    """
    cap = config.pair_cap() if cap is None else cap
    spec = GroupSpec((n1, n2))
    if spec.size > cap:
        raise CapExceededError(f"pair oracle on {spec}", spec.size, cap)
    orders = np.array(spec.orders, dtype=np.int64)
    elem_orders = kernels.element_orders_gcd(orders)
    gens = kernels.cyclic_generators(orders, elem_orders)
    rows = kernels.join_masks(orders, gens)
    unique = {row.tobytes() for row in rows}
    for key in unique:
        size = int(np.unpackbits(np.frombuffer(key, dtype=np.uint8)).sum())
        if spec.size % size:
            raise AssertionError(f"subgroup of size {size} violates Lagrange in {spec}")
    return len(unique)


def all_elements(spec: GroupSpec) -> Iterable[Element]:
    for coords in product(*(range(1, n + 1) for n in spec.orders)):
        yield Element(spec, coords)
