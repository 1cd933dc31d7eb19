"""Counting-kernel backend selection.

The hot loop (the one-coin-at-a-time prefix convolution that fills a
representation-count table) exists twice: a compiled Cython kernel and a
numpy fallback with identical semantics (bitwise-equal tables, same
overflow signalling).  The compiled one is preferred when its import
succeeds; set ``GENFROB_NO_EXT=1`` to force the fallback.
"""

import os

from . import _pykernel

if os.environ.get("GENFROB_NO_EXT"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND
build_counts = _impl.build_counts


def available_backends():
    """Importable kernel modules keyed by backend name."""
    found = {_pykernel.BACKEND: _pykernel}
    try:
        from . import _ckernel

        found[_ckernel.BACKEND] = _ckernel
    except ImportError:
        pass
    return found
