"""Kernel selection: compiled extension if available, pure Python otherwise.

Set GRUFF_PURE_KERNEL=1 to force the pure-Python kernel.
"""

import os

if os.environ.get("GRUFF_PURE_KERNEL"):
    from . import pykernel as kernel
else:
    try:
        from . import ckernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernel as kernel

__all__ = ["kernel"]
