"""Select the GF(p) elimination kernels: compiled when available, else pure Python.

Set ``NAKAYAMA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

# compiled kernels use 64-bit products
MAX_COMPILED_PRIME = 2**31

BACKEND = "python"
_compiled = None
if not os.environ.get("NAKAYAMA_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled

        BACKEND = "cython"
    except ImportError:
        _compiled = None


def rref_modp(rows, ncols, p):
    if _compiled is not None and p < MAX_COMPILED_PRIME:
        return _compiled.rref_modp(rows, ncols, p)
    return _kernels_py.rref_modp(rows, ncols, p)


def det_modp(rows, p):
    if _compiled is not None and p < MAX_COMPILED_PRIME:
        return _compiled.det_modp(rows, p)
    return _kernels_py.det_modp(rows, p)
