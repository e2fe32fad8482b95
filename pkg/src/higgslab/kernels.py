"""Backend selection for the F_p polynomial kernels.

The compiled module is used when it imports and the modulus fits in 31 bits;
setting ``HIGGSLAB_PURE=1`` forces the pure-Python path.
"""
import os

from . import _pykernels as py

try:
    if os.environ.get("HIGGSLAB_PURE"):
        raise ImportError("pure-Python kernels forced")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

C_MODULUS_LIMIT = 1 << 31
BACKEND = "cython" if compiled is not None else "python"


def for_modulus(p):
    """Return the kernel module to use for arithmetic modulo ``p``."""
    if compiled is not None and p < C_MODULUS_LIMIT:
        return compiled
    return py
