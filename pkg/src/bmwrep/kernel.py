"""Kernel backend selection.

Imports the compiled kernel when available, otherwise the pure-Python
twin.  Set BMWREP_PURE_PYTHON=1 to force the fallback (used by the
benchmark and by CI to test both paths).
"""

import os

if os.environ.get("BMWREP_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
sparse_add = _impl.sparse_add
sparse_sub = _impl.sparse_sub
sparse_neg = _impl.sparse_neg
sparse_mul = _impl.sparse_mul
sparse_scale = _impl.sparse_scale
sparse_mul_term = _impl.sparse_mul_term
