"""Kernel backend selection: compiled extension if present, numpy otherwise.

Set JACOBSTHAL_PURE=1 to force the numpy fallback even when the compiled
extension is available (useful for benchmarking and cross-checking).
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("JACOBSTHAL_PURE"):
    _impl = _fallback
    BACKEND = "fallback"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "fallback"

qr_table = _impl.qr_table
char_sum = _impl.char_sum
char_sum_fp2 = _impl.char_sum_fp2


def backend_name() -> str:
    return BACKEND
