"""Pure-numpy versions of the brute-force kernels (same contracts as the numba ones)."""

import numpy as np

name = "numpy"


def _coords(orders):
    return np.indices(tuple(int(n) for n in orders), dtype=np.int64).reshape(len(orders), -1).T


def _strides(orders):
    strides = np.ones(len(orders), dtype=np.int64)
    for k in range(len(orders) - 2, -1, -1):
        strides[k] = strides[k + 1] * orders[k + 1]
    return strides


def _axis(values, k, r):
    shape = [1] * r
    shape[k] = -1
    return values.reshape(shape)


def element_orders_lcm(orders):
    orders = np.asarray(orders, dtype=np.int64)
    r = len(orders)
    acc = np.ones((1,) * r, dtype=np.int64)
    for k, n in enumerate(orders):
        i = np.arange(n, dtype=np.int64)
        acc = np.lcm(acc, _axis(n // np.gcd(n, i), k, r))
    return np.broadcast_to(acc, tuple(orders)).ravel().copy()


def element_orders_gcd(orders):
    orders = np.asarray(orders, dtype=np.int64)
    r = len(orders)
    expo = np.lcm.reduce(orders)
    g = np.full((1,) * r, expo, dtype=np.int64)
    for k, n in enumerate(orders):
        i = np.arange(n, dtype=np.int64)
        g = np.gcd(g, _axis(i * (expo // n), k, r))
    return np.broadcast_to(expo // g, tuple(orders)).ravel().copy()


def element_orders_walk(orders):
    orders = np.asarray(orders, dtype=np.int64)
    coords = _coords(orders)
    out = np.ones(len(coords), dtype=np.int64)
    y = coords.copy()
    alive = np.any(y != 0, axis=1)
    while alive.any():
        y[alive] = (y[alive] + coords[alive]) % orders
        out[alive] += 1
        alive = np.any(y != 0, axis=1)
    return out


def _multiples(orders, strides, coord):
    out = [0]
    step = coord.copy()
    while step.any():
        out.append(int(step @ strides))
        step = (step + coord) % orders
    return np.array(out, dtype=np.int64)


def cyclic_members(orders, x):
    orders = np.asarray(orders, dtype=np.int64)
    coord = np.array(np.unravel_index(int(x), tuple(orders)), dtype=np.int64)
    return _multiples(orders, _strides(orders), coord)


def cyclic_generators(orders, elem_orders):
    orders = np.asarray(orders, dtype=np.int64)
    strides = _strides(orders)
    coords = _coords(orders)
    covered = np.zeros(len(elem_orders), dtype=bool)
    gens = []
    x = 0
    while x < len(covered):
        gens.append(x)
        ox = elem_orders[x]
        ks = np.arange(ox, dtype=np.int64)[:, None]
        members = ((ks * coords[x]) % orders) @ strides
        covered[members[elem_orders[members] == ox]] = True
        rest = np.flatnonzero(~covered[x:])
        x = x + int(rest[0]) if len(rest) else len(covered)
    return np.array(gens, dtype=np.int64)


def join_masks(orders, gens):
    orders = np.asarray(orders, dtype=np.int64)
    strides = _strides(orders)
    coords = _coords(orders)
    size = len(coords)
    rows = []
    for a, g in enumerate(gens):
        base = coords[_multiples(orders, strides, coords[g])]
        for h in gens[a:]:
            mask = np.zeros(size, dtype=bool)
            mask[base @ strides] = True
            t = coords[h].copy()
            while not mask[t @ strides]:
                mask[((base + t) % orders) @ strides] = True
                t = (t + coords[h]) % orders
            rows.append(np.packbits(mask, bitorder="little"))
    width = (size + 7) // 8
    if not rows:
        return np.zeros((0, width), dtype=np.uint8)
    return np.vstack(rows)
