"""Reference grid evaluator: numpy over chunks of grid points."""
from __future__ import annotations

import numpy as np

CHUNK = 1 << 14


def zero_points(values, lengths, row_ptr, coef, ii, jj, start, stop, native):
    """Flat indices in ``[start, stop)`` where every polynomial row vanishes.

    ``values[c, :lengths[c]]`` are the integer grid values of coordinate ``c``;
    row ``k`` is ``sum coef[t] * y[ii[t]] * y[jj[t]]`` over ``t`` in
    ``row_ptr[k]:row_ptr[k+1]`` where index ``m`` (one past the last
    coordinate) stands for the constant 1.
    """
    m = len(lengths)
    dtype = np.int64 if native else object
    vals = np.asarray(values, dtype=dtype)
    coef = np.asarray(coef, dtype=dtype)
    dims = tuple(int(n) for n in lengths)
    found = []
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        flat = np.arange(lo, hi, dtype=np.int64)
        idx = np.unravel_index(flat, dims) if m else ()
        y = np.empty((hi - lo, m + 1), dtype=dtype)
        for c in range(m):
            y[:, c] = vals[c][idx[c]]
        y[:, m] = 1
        alive = np.ones(hi - lo, dtype=bool)
        for k in range(len(row_ptr) - 1):
            a, b = row_ptr[k], row_ptr[k + 1]
            if a == b:
                continue
            sel = np.nonzero(alive)[0]
            if not len(sel):
                break
            ys = y[sel]
            acc = (ys[:, ii[a:b]] * ys[:, jj[a:b]]).dot(coef[a:b])
            alive[sel[acc != 0]] = False
        found.extend(int(f) for f in flat[alive])
    return found
