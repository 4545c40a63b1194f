"""Backend switch for the hot kernels.

Kernels in :mod:`ellipsum._kernels` are written in the scalar-loop subset
shared by numba and CPython.  They are compiled with ``numba.njit`` unless
numba is missing or ``ELLIPSUM_DISABLE_NUMBA`` is set to a truthy value, in
which case the very same functions run as plain Python/NumPy.
"""
import os

DISABLE_ENV = "ELLIPSUM_DISABLE_NUMBA"

_flag = os.environ.get(DISABLE_ENV, "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no", "off")

try:
    import numba
except ImportError:  # pragma: no cover - fall back to plain Python
    numba = None

USE_NUMBA = numba is not None and not _disabled
BACKEND = "numba" if USE_NUMBA else "python"


def njit(fn=None, **kwargs):
    """``numba.njit(cache=True)`` when enabled, identity otherwise."""
    if fn is None:
        return lambda f: njit(f, **kwargs)
    if not USE_NUMBA:
        return fn
    kwargs.setdefault("cache", True)
    return numba.njit(**kwargs)(fn)


def py_func(fn):
    """The uncompiled Python function behind a kernel."""
    return getattr(fn, "py_func", fn)
