"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the
pure-Python module is loaded.  Set ``MINKSUM_PURE_PYTHON=1`` to force the
fallback (the benchmark and the parity tests rely on this).
"""
from __future__ import annotations

import os

from . import _kernels as pure

BACKEND = "python"

if os.environ.get("MINKSUM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = pure
else:
    _impl = pure

det_int = _impl.det_int
echelon_int = _impl.echelon_int
rank_int = _impl.rank_int
kernel_vector = _impl.kernel_vector
dot_int = _impl.dot_int
side_signs = _impl.side_signs

__all__ = [
    "BACKEND",
    "det_int",
    "dot_int",
    "echelon_int",
    "kernel_vector",
    "pure",
    "rank_int",
    "side_signs",
]
