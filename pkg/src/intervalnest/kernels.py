"""Backend selection for the nest-ordering kernels.

The compiled extension is preferred; set ``INTERVALNEST_PURE_PYTHON=1`` to
force the pure-Python implementation.
"""

import os

from . import _kernels_py

if os.environ.get("INTERVALNEST_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

nest_ok = _impl.nest_ok
first_nest_ordering = _impl.first_nest_ordering
count_nest_orderings = _impl.count_nest_orderings
