import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from abcensus.errors import CapExceededError, DomainError
from abcensus.oracle import (
    CanonicalSubgroup,
    Element,
    all_elements,
    element_order,
    generated_subgroup,
    oracle_all_subgroups_rank2,
    oracle_cyclic_subgroups,
    oracle_spectrum,
    oracle_spectrum_factored,
)
from abcensus.spectra import GroupSpec, full_spectrum

from conftest import brute_cyclic_subgroups, brute_orders, brute_spectrum

orders_st = st.lists(st.integers(min_value=1, max_value=16), min_size=1, max_size=4)


def spec(*orders):
    return GroupSpec(orders)


def test_element_order_examples():
    s = spec(4, 2)
    assert element_order(Element(s, (4, 2))) == 1
    assert element_order(Element(s, (1, 1))) == 4
    assert element_order(Element(spec(6), (4,))) == 3


def test_element_bounds():
    with pytest.raises(DomainError):
        Element(spec(4, 2), (0, 1))
    with pytest.raises(DomainError):
        Element(spec(4, 2), (1,))
    assert Element.from_residues(spec(4, 2), (0, 1)).coords == (4, 1)


@given(orders_st)
def test_element_order_forms_match_repeated_addition(orders):
    if math.prod(orders) > 2000:
        return
    s = GroupSpec(orders)
    assert [element_order(e) for e in all_elements(s)] == brute_orders_coords(orders)


def brute_orders_coords(orders):
    # all_elements runs coordinates 1..n; residue n is 0, so rotate each axis by one
    by_residue = dict(zip(product(*(range(n) for n in orders)), brute_orders(orders)))
    return [by_residue[tuple(i % n for i, n in zip(c, orders))]
            for c in product(*(range(1, n + 1) for n in orders))]


def test_oracle_spectrum_examples():
    assert oracle_spectrum(spec(4, 2)).entries == {1: (1, 1), 2: (3, 3), 4: (4, 2)}
    assert oracle_spectrum(spec(3, 3)).entries == {1: (1, 1), 3: (8, 4)}
    assert oracle_spectrum(spec(1)).entries == {1: (1, 1)}


@given(orders_st)
def test_oracle_spectrum_matches_brute(orders):
    if math.prod(orders) > 2000:
        return
    swept = oracle_spectrum(GroupSpec(orders))
    assert {d: o for d, (o, _) in swept.entries.items() if o} == brute_spectrum(orders)


def test_oracle_cap():
    with pytest.raises(CapExceededError):
        oracle_spectrum(spec(100, 100), cap=5000)
    with pytest.raises(CapExceededError):
        oracle_cyclic_subgroups(spec(100, 100), cap=5000)
    with pytest.raises(CapExceededError):
        oracle_all_subgroups_rank2(50, 50)


def test_oracle_cyclic_examples():
    c = oracle_cyclic_subgroups(spec(2, 2))
    assert c.by_order == {1: 1, 2: 3} and c.total == 4
    c = oracle_cyclic_subgroups(spec(4, 2))
    assert c.by_order == {1: 1, 2: 3, 4: 2} and c.total == 6
    assert oracle_cyclic_subgroups(spec(6, 6)).total == len(brute_cyclic_subgroups((6, 6))) == 20


@given(orders_st)
def test_oracle_cyclic_matches_definition(orders):
    if math.prod(orders) > 600:
        return
    census = oracle_cyclic_subgroups(GroupSpec(orders))
    subs = brute_cyclic_subgroups(orders)
    assert census.total == len(subs) == sum(census.by_order.values())
    by_size = {}
    for h in subs:
        by_size[len(h)] = by_size.get(len(h), 0) + 1
    assert census.by_order == dict(sorted(by_size.items()))


def test_oracle_all_subgroups_examples():
    assert oracle_all_subgroups_rank2(2, 2) == 5
    assert oracle_all_subgroups_rank2(4, 2) == 8
    for n in (1, 7, 12, 30, 64):
        assert oracle_all_subgroups_rank2(n, 1) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_generated_subgroup():
    s = spec(4, 2)
    h = generated_subgroup(s, [(1, 1)])
    assert h.order == 4 and (2, 0) in h.elements
    assert generated_subgroup(s, [(1, 0), (0, 1)]).order == 8
    assert generated_subgroup(s, []).elements == ((0, 0),)


def test_canonical_subgroup_checks():
    with pytest.raises(AssertionError):
        CanonicalSubgroup(spec(4), ((1,), (2,)))
    with pytest.raises(AssertionError):
        CanonicalSubgroup(spec(4), ((0,), (1,)))
    with pytest.raises(AssertionError):
        CanonicalSubgroup(spec(6), ((0,), (1,), (2,), (3,), (4,), (5,), (0,)))


@pytest.mark.parametrize("orders", [(4, 6), (3, 3, 3), (2, 4, 8), (12,)])
def test_cyclic_generators_give_distinct_closures(orders):
    from abcensus import kernels
    arr = np.array(orders, dtype=np.int64)
    gens = kernels.cyclic_generators(arr, kernels.element_orders_gcd(arr))
    s = GroupSpec(orders)
    seen = set()
    for g in gens:
        coords = tuple(int(c) for c in np.unravel_index(int(g), orders))
        h = generated_subgroup(s, [coords])
        assert h.elements not in seen
        seen.add(h.elements)
    assert len(seen) == len(brute_cyclic_subgroups(orders))


def test_factored_oracle_agrees_with_sweep():
    for orders in [(4, 2), (6, 10), (8, 8, 2), (9, 3, 27), (1, 5)]:
        s = GroupSpec(orders)
        assert oracle_spectrum_factored(s) == oracle_spectrum(s)


def test_factored_oracle_reaches_large_groups():
    s = spec(625, 625, 625, 625)
    assert oracle_spectrum_factored(s) == full_spectrum(s)


def test_lagrange_on_spectrum_sizes():
    for orders in [(6, 4), (2, 2, 6), (30,)]:
        s = GroupSpec(orders)
        for order in oracle_cyclic_subgroups(s).by_order:
            assert s.size % order == 0
