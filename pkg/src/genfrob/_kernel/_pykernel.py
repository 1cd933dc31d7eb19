"""numpy counting kernel (fallback when the compiled one is absent).

For a single coin of size ``a`` the in-order update ``c[n] += c[n-a]`` is a
running prefix sum along every residue class mod ``a``, so one coin pass is
a single ``add.accumulate`` over a ``(blocks, a)``-shaped view.
"""

import numpy as np

from ..errors import RangeOverflowError

BACKEND = "python"


def build_counts(parts, n_max):
    """int64 table of representation counts for 0..n_max over ``parts``.

    Wraparound is detected after every coin pass (the first wrapped partial
    sum is always negative) and raised as :class:`RangeOverflowError`.
    """
    counts = np.zeros(n_max + 1, dtype=np.int64)
    counts[0] = 1
    for part in parts:
        a = int(part)
        if a < 1:
            raise ValueError("parts must be positive")
        if a > n_max:
            continue
        _accumulate_mod(counts, a)
        if counts.min() < 0:
            raise RangeOverflowError("representation count exceeds int64")
    return counts


def _accumulate_mod(counts, step):
    size = counts.shape[0]
    pad = -size % step
    if pad:
        buf = np.zeros(size + pad, dtype=np.int64)
        buf[:size] = counts
    else:
        buf = counts
    view = buf.reshape(-1, step)
    np.add.accumulate(view, axis=0, out=view)
    if pad:
        counts[:] = buf[:size]
