"""Backend selection for the bitset kernels.

The compiled extension is used when importable on a little-endian host;
``SEPDEPTH_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os
import sys

from . import _pure

if os.environ.get("SEPDEPTH_PURE_PYTHON", "") not in ("", "0") or sys.byteorder != "little":
    _impl = _pure
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
PackedGraph = _impl.PackedGraph
treedepth_subsets = _impl.treedepth_subsets
treewidth_subsets = _impl.treewidth_subsets

__all__ = ["BACKEND", "PackedGraph", "treedepth_subsets", "treewidth_subsets"]
