from collections import Counter
from itertools import product
from math import gcd

from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def brute_orders(orders):
    """Order of every element of C_{n1} x ... x C_{nr}, by repeated addition."""
    out = []
    for x in product(*(range(n) for n in orders)):
        m, y = 1, x
        while any(y):
            y = tuple((a + b) % n for a, b, n in zip(y, x, orders))
            m += 1
        out.append(m)
    return out


def brute_spectrum(orders):
    return dict(sorted(Counter(brute_orders(orders)).items()))


def brute_cyclic_subgroups(orders):
    """Distinct <x> as frozensets, straight from the definition."""
    subs = set()
    for x in product(*(range(n) for n in orders)):
        members = {tuple([0] * len(orders))}
        y = x
        while any(y):
            members.add(y)
            y = tuple((a + b) % n for a, b, n in zip(y, x, orders))
        subs.add(frozenset(members))
    return subs


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def brute_jordan(r, n):
    """r-tuples mod n whose gcd with n is 1."""
    return sum(1 for t in product(range(n), repeat=r) if gcd(n, *t) == 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
