"""Time the brute-force kernels under numba and pure numpy.

    python benchmarks/bench_kernels.py [--repeat N]

The first numba call per signature compiles (or loads the on-disk cache),
so every kernel is warmed up once before timing.
"""

import argparse
import time

import numpy as np

from abcensus.kernels import _numba, _numpy

GROUPS = [(5000,), (70, 70), (20, 20, 12), (36, 36), (16, 8, 4, 2)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(orders):
    eo = _numpy.element_orders_gcd(orders)
    gens = _numpy.cyclic_generators(orders, eo)
    yield "element_orders_gcd", lambda m: m.element_orders_gcd(orders)
    yield "element_orders_lcm", lambda m: m.element_orders_lcm(orders)
    yield "cyclic_generators", lambda m: m.cyclic_generators(orders, eo)
    if len(orders) == 2 and np.prod(orders) <= 2000:
        yield "join_masks", lambda m: m.join_masks(orders, gens)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'group':<14} {'kernel':<20} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for shape in GROUPS:
        orders = np.array(shape, dtype=np.int64)
        for name, call in cases(orders):
            call(_numba)  # warm-up / compile
            t_jit = best_of(lambda: call(_numba), args.repeat)
            t_np = best_of(lambda: call(_numpy), args.repeat)
            label = "x".join(map(str, shape))
            print(f"{label:<14} {name:<20} {t_jit * 1e3:>10.2f} {t_np * 1e3:>10.2f} {t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()
