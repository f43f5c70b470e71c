"""Backend selection for the hot loops.

The compiled extension ``_ckernels`` is used when it imports and
``SMASHPROD_PURE_PYTHON`` is unset; otherwise the pure-Python module is used.
"""

import os

from smashprod import _kernels_py

try:
    if os.environ.get("SMASHPROD_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from smashprod import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# compiled chain_sum packs monomials into unsigned 64-bit words
_MAX_PACKED_BITS = 63


def margin_fill(col_sums, row_sums):
    if _ckernels is not None:
        return _ckernels.margin_fill(tuple(col_sums), tuple(row_sums))
    return _kernels_py.margin_fill(tuple(col_sums), tuple(row_sums))


def chain_sum(keys, signs, repeats, parts, reverse, max_degree, shift):
    if _ckernels is not None and shift + max(max_degree, 1).bit_length() <= _MAX_PACKED_BITS:
        try:
            return _ckernels.chain_sum(keys, signs, repeats, parts, reverse, max_degree, shift)
        except OverflowError:
            pass
    return _kernels_py.chain_sum(keys, signs, repeats, parts, reverse, max_degree, shift)
