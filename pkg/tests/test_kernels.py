"""Compiled and pure-numpy kernels must agree bit for bit."""

import numpy as np
import pytest

from abcensus.kernels import _numba, _numpy

SHAPES = [(1,), (7,), (4, 2), (6, 6), (2, 2, 2), (3, 4, 5), (8, 1, 6), (2, 3, 2, 3), (12, 10)]


@pytest.fixture(params=SHAPES, ids=lambda s: "x".join(map(str, s)))
def orders(request):
    return np.array(request.param, dtype=np.int64)


@pytest.mark.parametrize("fn", ["element_orders_lcm", "element_orders_gcd", "element_orders_walk"])
def test_element_orders(orders, fn):
    a = getattr(_numba, fn)(orders)
    b = getattr(_numpy, fn)(orders)
    assert a.dtype == b.dtype == np.int64
    np.testing.assert_array_equal(a, b)


def test_order_forms_agree(orders):
    walk = _numpy.element_orders_walk(orders)
    np.testing.assert_array_equal(_numba.element_orders_gcd(orders), walk)
    np.testing.assert_array_equal(_numba.element_orders_lcm(orders), walk)


def test_cyclic_members(orders):
    size = int(np.prod(orders))
    for x in range(0, size, max(1, size // 7)):
        np.testing.assert_array_equal(_numba.cyclic_members(orders, x), _numpy.cyclic_members(orders, x))


def test_cyclic_generators(orders):
    eo = _numpy.element_orders_gcd(orders)
    np.testing.assert_array_equal(_numba.cyclic_generators(orders, eo), _numpy.cyclic_generators(orders, eo))


def test_join_masks(orders):
    if len(orders) > 2:
        pytest.skip("pair joins are only used for rank 2")
    eo = _numpy.element_orders_gcd(orders)
    gens = _numpy.cyclic_generators(orders, eo)
    np.testing.assert_array_equal(_numba.join_masks(orders, gens), _numpy.join_masks(orders, gens))


def test_backend_flag(monkeypatch):
    import importlib

    import abcensus.kernels as k

    monkeypatch.setenv("ABCENSUS_BACKEND", "numpy")
    importlib.reload(k)
    assert k.BACKEND == "numpy"
    monkeypatch.setenv("ABCENSUS_BACKEND", "bogus")
    with pytest.raises(ImportError):
        importlib.reload(k)
    monkeypatch.delenv("ABCENSUS_BACKEND")
    importlib.reload(k)
    assert k.BACKEND == "numba"
