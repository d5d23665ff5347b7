"""Backend selection for the numeric kernels.

The kernels in :mod:`singcurve.kernels` exist twice: an explicit-loop
version compiled with numba, and a vectorised numpy version.  Both return
identical integers.  The default is numba when it imports; set
``SINGCURVE_BACKEND=numpy`` to force the fallback.
"""

import contextlib
import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

HAVE_NUMBA = numba is not None
BACKENDS = ("numba", "numpy")

_env = os.environ.get("SINGCURVE_BACKEND", "numba").strip().lower()
if _env not in BACKENDS:
    raise RuntimeError(f"SINGCURVE_BACKEND must be one of {BACKENDS}, got {_env!r}")
_backend = _env if HAVE_NUMBA else "numpy"


def njit(func):
    """``numba.njit(cache=True)`` when numba is present, identity otherwise."""
    if numba is None:
        return func
    return numba.njit(cache=True)(func)


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)
