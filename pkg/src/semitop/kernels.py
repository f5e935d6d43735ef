"""Backend selection for the hot kernels.

The compiled ``_kernels`` extension is used when it imports and the inputs
fit its fixed-width masks; otherwise calls go to ``_kernels_py``. Setting
``SEMITOP_PURE=1`` forces the pure backend for the whole process.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

_native = None
if os.environ.get("SEMITOP_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _native  # type: ignore[no-redef]
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"

_MAX_ELEMENTS = 64
_MAX_POINT_BITS = 24


def closure(add, act, m, n, zero, seed):
    if _native is not None and m <= _MAX_ELEMENTS:
        return _native.closure(add, act, m, n, zero, seed)
    return _py.closure(add, act, m, n, zero, seed)


def subsemimodules(add, act, m, n, zero, cap):
    if _native is not None and m <= _MAX_ELEMENTS:
        return _native.subsemimodules(add, act, m, n, zero, cap)
    return _py.subsemimodules(add, act, m, n, zero, cap)


def union_closure(masks, cap):
    if _native is not None and max(masks, default=0).bit_length() <= _MAX_POINT_BITS:
        return _native.union_closure(masks, cap)
    return _py.union_closure(masks, cap)


def intersection_closure(masks, full, cap):
    if _native is not None and full.bit_length() <= _MAX_POINT_BITS:
        return _native.intersection_closure(masks, full, cap)
    return _py.intersection_closure(masks, full, cap)


def up_masks(subs, points):
    if _native is not None and len(points) <= 64:
        return _native.up_masks(subs, points)
    return _py.up_masks(subs, points)
