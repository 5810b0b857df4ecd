"""Backend selection for the hot loops.

The compiled extension is used when it imported cleanly; setting
``CATSL2_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernels

_impl = _pykernels
if os.environ.get("CATSL2_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
poly_mul = _impl.poly_mul
poly_add_scaled = _impl.poly_add_scaled
poly_swap = _impl.poly_swap
divided_difference = _impl.divided_difference
reduce_row = _impl.reduce_row
insert_row = _impl.insert_row
rank = _impl.rank
insert_row_mod = _impl.insert_row_mod
