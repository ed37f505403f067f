# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid evaluator: odometer walk with early exit per row."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


def zero_points(values, lengths, row_ptr, coef, ii, jj, Py_ssize_t start, Py_ssize_t stop, native):
    if not native:
        from .._polygrid_py import zero_points as slow
        return slow(values, lengths, row_ptr, coef, ii, jj, start, stop, False)
    cdef int64_t[:, ::1] vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef int64_t[::1] lens = np.ascontiguousarray(lengths, dtype=np.int64)
    cdef int64_t[::1] rp = np.ascontiguousarray(row_ptr, dtype=np.int64)
    cdef int64_t[::1] cf = np.ascontiguousarray(coef, dtype=np.int64)
    cdef int64_t[::1] ai = np.ascontiguousarray(ii, dtype=np.int64)
    cdef int64_t[::1] aj = np.ascontiguousarray(jj, dtype=np.int64)
    cdef Py_ssize_t m = lens.shape[0]
    cdef Py_ssize_t nrows = rp.shape[0] - 1
    cdef int64_t[::1] digit = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] y = np.ones(m + 1, dtype=np.int64)
    cdef Py_ssize_t p, c, k, t
    cdef int64_t acc, rem
    cdef bint ok
    out = []
    rem = start
    for c in range(m - 1, -1, -1):
        digit[c] = rem % lens[c]
        rem //= lens[c]
    for c in range(m):
        y[c] = vals[c, digit[c]]
    for p in range(start, stop):
        ok = True
        for k in range(nrows):
            acc = 0
            for t in range(rp[k], rp[k + 1]):
                acc += cf[t] * y[ai[t]] * y[aj[t]]
            if acc != 0:
                ok = False
                break
        if ok:
            out.append(p)
        c = m - 1
        while c >= 0:
            digit[c] += 1
            if digit[c] < lens[c]:
                y[c] = vals[c, digit[c]]
                break
            digit[c] = 0
            y[c] = vals[c, 0]
            c -= 1
    return out
