"""Backend selection for the pixel kernels.

The compiled extension is preferred; set ``LIPGAIN_PURE_PYTHON=1`` before
import to force the fallback.  Both backends are importable directly for
comparison (see ``benchmarks/``).
"""

import os

from . import _pykernels

if os.environ.get("LIPGAIN_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

add = _impl.add
sub = _impl.sub
smul = _impl.smul
prod = _impl.prod
moments = _impl.moments


def available_backends():
    """Map of backend name to kernel module for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
