# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense character kernels."""

import numpy as np

from libc.stdint cimport int64_t


def geometric_spread(src, Py_ssize_t off, Py_ssize_t count):
    """``out[k] = sum(src[k - j*off] for j in range(count))`` with out-of-range terms zero.

    One pass with a running window sum, so the cost does not depend on ``count``.
    """
    cdef int64_t[::1] s = np.ascontiguousarray(src, dtype=np.int64)
    cdef Py_ssize_t n = s.shape[0]
    out_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t k, span = count * off
    cdef int64_t acc
    if off > 0:
        for k in range(n):
            acc = s[k]
            if k - off >= 0:
                acc += out[k - off]
            if k - span >= 0:
                acc -= s[k - span]
            out[k] = acc
    else:
        for k in range(n - 1, -1, -1):
            acc = s[k]
            if k - off < n:
                acc += out[k - off]
            if k - span < n:
                acc -= s[k - span]
            out[k] = acc
    return out_arr
