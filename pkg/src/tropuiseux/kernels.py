"""Kernel backend selection.

The compiled extension is used when it imports; set ``TROPUISEUX_PURE=1``
to force the pure-Python fallback. ``BACKEND`` names the active one.
"""
import os

from . import _kernels_py

if os.environ.get("TROPUISEUX_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

lower_hull = _impl.lower_hull
minmax_slope = _impl.minmax_slope
maxmin_slope = _impl.maxmin_slope
min_affine = _impl.min_affine

__all__ = ["BACKEND", "lower_hull", "minmax_slope", "maxmin_slope", "min_affine"]
