"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``Z4GBENT_PURE=1`` to force the numpy fallback.
"""

import os

from . import _fallback

try:
    if os.environ.get("Z4GBENT_PURE"):
        raise ImportError("pure mode requested")
    from . import _kernels as _impl
    BACKEND = "compiled"
except ImportError:
    _impl = _fallback
    BACKEND = "numpy"

z4_swe_counts = _impl.z4_swe_counts
binary_weight_counts = _impl.binary_weight_counts

__all__ = ["BACKEND", "z4_swe_counts", "binary_weight_counts"]
