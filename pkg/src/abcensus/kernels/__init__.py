"""Backend selection for the brute-force kernels.

``ABCENSUS_BACKEND=numpy`` forces the pure-numpy path; otherwise numba is
used when importable.
"""

import os

_requested = os.environ.get("ABCENSUS_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"ABCENSUS_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from . import _numba as _impl
    except ImportError:  # numba not installed
        from . import _numpy as _impl
else:
    from . import _numpy as _impl

BACKEND = _impl.name

element_orders_lcm = _impl.element_orders_lcm
element_orders_gcd = _impl.element_orders_gcd
element_orders_walk = _impl.element_orders_walk
cyclic_members = _impl.cyclic_members
cyclic_generators = _impl.cyclic_generators
join_masks = _impl.join_masks
