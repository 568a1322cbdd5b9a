"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``COMPACTLOCUS_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("COMPACTLOCUS_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

closure = _impl.closure
element_orders = _impl.element_orders
canonical_conjugate = _impl.canonical_conjugate
is_subconjugate = _impl.is_subconjugate

__all__ = ["BACKEND", "closure", "element_orders", "canonical_conjugate", "is_subconjugate"]
