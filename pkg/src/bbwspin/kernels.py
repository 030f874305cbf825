"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``BBW_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("BBW_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

signed_sort = _impl.signed_sort
lr_coefficients = _impl.lr_coefficients

__all__ = ["BACKEND", "signed_sort", "lr_coefficients"]
