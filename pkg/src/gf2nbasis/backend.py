"""Kernel backend selection.

GF2NBASIS_BACKEND chooses the implementation of the hot kernels:
  - "numba" (default when importable): @njit compiled loops,
  - "numpy": pure-numpy fallback,
  - "auto" / unset: numba if available, else numpy.
"""
import os

from . import _kernels_numpy

_requested = os.environ.get("GF2NBASIS_BACKEND", "auto").strip().lower() or "auto"

if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"GF2NBASIS_BACKEND={_requested!r} not understood (use numba, numpy, or auto)"
    )

if _requested == "numpy":
    _impl = _kernels_numpy
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        if _requested == "numba":
            raise
        _impl = _kernels_numpy

ACTIVE = _impl.NAME

mul_words = _impl.mul_words
square_words = _impl.square_words
mod_words = _impl.mod_words
zech_tables = _impl.zech_tables


def available_backends():
    """Names of importable kernel backends."""
    names = ["numpy"]
    try:
        from . import _kernels_numba  # noqa: F401

        names.insert(0, "numba")
    except ImportError:
        pass
    return names


def kernel_module(name):
    """The kernel module for an explicit backend name (for benchmarks)."""
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    raise ValueError(f"unknown backend {name!r}")
