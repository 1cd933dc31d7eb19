# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernel: one-coin-at-a-time prefix convolution.

Semantics (including overflow signalling) match the numpy fallback; the
resulting tables are bitwise equal.
"""

import numpy as np

from ..errors import RangeOverflowError

BACKEND = "compiled"

cdef long long _I64_MAX = 9223372036854775807


def build_counts(parts, long long n_max):
    """int64 table of representation counts for 0..n_max over ``parts``."""
    counts_arr = np.zeros(n_max + 1, dtype=np.int64)
    cdef long long[::1] c = counts_arr
    cdef long long a, n, add
    c[0] = 1
    for part in parts:
        a = part
        if a < 1:
            raise ValueError("parts must be positive")
        if a > n_max:
            continue
        for n in range(a, n_max + 1):
            add = c[n - a]
            if add > _I64_MAX - c[n]:
                raise RangeOverflowError("representation count exceeds int64")
            c[n] = c[n] + add
    return counts_arr
