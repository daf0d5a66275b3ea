"""Kernel selection.

The compiled ``_ckernels`` module is used for graphs with at most 64
vertices when it imports; everything else runs on ``_pykernels``. Set
``LFORCE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("LFORCE_PURE_PYTHON") == "1":
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

HAVE_COMPILED = _ckernels is not None


def backend_for(n):
    """Kernel module for a graph on ``n`` vertices."""
    if _ckernels is not None and n <= _ckernels.MAX_VERTICES:
        return _ckernels
    return _pykernels


def available_backends():
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    return backends
