"""Kernel backend selection.

The compiled extension is used when importable; set ``THINPOS_PURE=1`` to force
the pure-Python kernels.
"""
import os

from . import _pykernels

if os.environ.get("THINPOS_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.NAME

padded_compare = _impl.padded_compare
union_components = _impl.union_components


def smith_decomp(a, m, n):
    if _impl is _pykernels:
        return _pykernels.smith_decomp(a, m, n)
    try:
        return _impl.smith_decomp(a, m, n)
    except OverflowError:
        return _pykernels.smith_decomp(a, m, n)
