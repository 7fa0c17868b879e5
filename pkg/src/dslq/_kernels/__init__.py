"""Kernel dispatch.

The numba implementations are used when numba imports cleanly. Setting
``DSLQ_PURE_NUMPY=1`` in the environment forces the vectorized numpy path;
the choice is made once, at import time.
"""

import os

_FLAG = "DSLQ_PURE_NUMPY"


def _wants_numpy() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


if _wants_numpy():
    from . import vectorized as _impl

    BACKEND = "numpy"
else:
    try:
        from . import jitted as _impl

        BACKEND = "numba"
    except ImportError:  # numba missing
        from . import vectorized as _impl

        BACKEND = "numpy"

bfs_distances = _impl.bfs_distances
jacobi_eigenvalues = _impl.jacobi_eigenvalues
power_iteration = _impl.power_iteration
deficiency_scan = _impl.deficiency_scan

__all__ = [
    "BACKEND",
    "bfs_distances",
    "jacobi_eigenvalues",
    "power_iteration",
    "deficiency_scan",
]
