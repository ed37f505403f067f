"""Zero search for systems of quadratic polynomials over integer grids.

The compiled evaluator is used when it was built; otherwise the numpy
evaluator in :mod:`hompoisson._polygrid_py` is used.  Both return identical
results.  Set ``HOMPOISSON_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _polygrid_py

try:
    if os.environ.get("HOMPOISSON_PURE_PYTHON"):
        raise ImportError
    from ._ext import _polygrid as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def zero_points(values, lengths, row_ptr, coef, ii, jj, start, stop, native, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled grid evaluator is not available")
        return _compiled.zero_points(values, lengths, row_ptr, coef, ii, jj, start, stop, native)
    return _polygrid_py.zero_points(values, lengths, row_ptr, coef, ii, jj, start, stop, native)
