"""NumPy implementation of the dense character kernels."""

import numpy as np


def geometric_spread(src, off, count):
    """``out[k] = sum(src[k - j*off] for j in range(count))`` with out-of-range terms zero."""
    src = np.ascontiguousarray(src, dtype=np.int64)
    out = src.copy()
    n = src.shape[0]
    step = abs(off)
    for j in range(1, count):
        s = j * step
        if s >= n:
            break
        if off > 0:
            out[s:] += src[: n - s]
        else:
            out[: n - s] += src[s:]
    return out
