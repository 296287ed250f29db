"""Numba switch.

Kernels are compiled with numba when it is importable and the environment
variable ``MVKIT_NUMBA`` is not set to ``0``; otherwise the pure-numpy
implementations in :mod:`mvkit.kernels` are used.
"""
import logging
import os

logger = logging.getLogger(__name__)

_requested = os.environ.get("MVKIT_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _requested


def njit(func):
    """Compile ``func`` in nopython mode, or return it unchanged without numba."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True)(func)


if _requested and not HAVE_NUMBA:  # pragma: no cover
    logger.warning("numba not importable; falling back to numpy kernels")
