"""Compiled brute-force kernels.

Elements of C_{n1} x ... x C_{nr} are flat row-major indices into the
coordinate grid; index 0 is the identity.  Every kernel walks the group by
repeated componentwise addition and never uses a counting formula.
"""

import numpy as np
from numba import njit

name = "numba"


@njit(cache=True)
def _strides(orders):
    r = orders.shape[0]
    strides = np.empty(r, dtype=np.int64)
    s = 1
    for k in range(r - 1, -1, -1):
        strides[k] = s
        s *= orders[k]
    return strides


@njit(cache=True)
def _add(a, b, orders, strides):
    out = 0
    for k in range(orders.shape[0]):
        n = orders[k]
        ca = (a // strides[k]) % n
        cb = (b // strides[k]) % n
        out += ((ca + cb) % n) * strides[k]
    return out


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def element_orders_lcm(orders):
    """Order of each element as the lcm of its component orders n_k / gcd(n_k, i_k)."""
    strides = _strides(orders)
    size = 1
    for n in orders:
        size *= n
    out = np.empty(size, dtype=np.int64)
    for f in range(size):
        acc = 1
        for k in range(orders.shape[0]):
            n = orders[k]
            i = (f // strides[k]) % n
            comp = n // _gcd(n, i)
            acc = acc // _gcd(acc, comp) * comp
        out[f] = acc
    return out


@njit(cache=True)
def element_orders_gcd(orders):
    """Order of each element as n / gcd(i_1 n/n_1, ..., i_r n/n_r, n), n the exponent."""
    strides = _strides(orders)
    size = 1
    expo = 1
    for n in orders:
        size *= n
        expo = expo // _gcd(expo, n) * n
    out = np.empty(size, dtype=np.int64)
    for f in range(size):
        g = expo
        for k in range(orders.shape[0]):
            n = orders[k]
            i = (f // strides[k]) % n
            g = _gcd(g, i * (expo // n))
        out[f] = expo // g
    return out


@njit(cache=True)
def element_orders_walk(orders):
    """Order of each element by adding it to itself until reaching the identity."""
    strides = _strides(orders)
    size = 1
    for n in orders:
        size *= n
    out = np.empty(size, dtype=np.int64)
    for f in range(size):
        m = 1
        y = f
        while y != 0:
            y = _add(y, f, orders, strides)
            m += 1
        out[f] = m
    return out


@njit(cache=True)
def cyclic_members(orders, x):
    """Flat indices of <x>, in the order 0, x, 2x, ..."""
    strides = _strides(orders)
    buf = [0]
    y = x
    while y != 0:
        buf.append(y)
        y = _add(y, x, orders, strides)
    out = np.empty(len(buf), dtype=np.int64)
    for i in range(len(buf)):
        out[i] = buf[i]
    return out


@njit(cache=True)
def cyclic_generators(orders, elem_orders):
    """One generator per cyclic subgroup, smallest flat index first.

    y in <x> with o(y) = o(x) generates the same subgroup as x, so every
    such y is marked covered when <x> is walked.
    """
    strides = _strides(orders)
    size = elem_orders.shape[0]
    covered = np.zeros(size, dtype=np.bool_)
    gens = np.empty(size, dtype=np.int64)
    count = 0
    for x in range(size):
        if covered[x]:
            continue
        gens[count] = x
        count += 1
        ox = elem_orders[x]
        y = 0
        while True:
            if elem_orders[y] == ox:
                covered[y] = True
            y = _add(y, x, orders, strides)
            if y == 0:
                break
    return gens[:count]


@njit(cache=True)
def join_masks(orders, gens):
    """Packed membership bitsets of <g_i, g_j> for all i <= j (little bit order)."""
    strides = _strides(orders)
    size = 1
    for n in orders:
        size *= n
    width = (size + 7) // 8
    m = gens.shape[0]
    rows = np.zeros((m * (m + 1) // 2, width), dtype=np.uint8)
    mask = np.zeros(size, dtype=np.bool_)
    row = 0
    for a in range(m):
        base = cyclic_members(orders, gens[a])
        for b in range(a, m):
            mask[:] = False
            for y in base:
                mask[y] = True
            h = gens[b]
            t = h
            while not mask[t]:
                for y in base:
                    mask[_add(y, t, orders, strides)] = True
                t = _add(t, h, orders, strides)
            for i in range(size):
                if mask[i]:
                    rows[row, i >> 3] |= np.uint8(1 << (i & 7))
            row += 1
    return rows
