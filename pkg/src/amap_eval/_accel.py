"""Backend selection for the numeric kernels.

Hot inner loops (Chamfer matrices, batched resampling, the assignment solver)
exist twice: a numba ``@njit`` build and a pure-numpy build.  The active
backend is chosen at import time from the ``AMAP_EVAL_NUMBA`` environment
variable (set it to ``0`` to force the numpy path) and can be switched at
runtime with :func:`set_backend`, which the backend-comparison benchmark and
the equivalence tests rely on.
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency, but stay usable without it
    numba = None

ENV_FLAG = "AMAP_EVAL_NUMBA"


def numba_available() -> bool:
    return numba is not None


def _env_wants_numba() -> bool:
    return os.environ.get(ENV_FLAG, "1").strip().lower() not in ("0", "false", "no", "off")


_active = "numba" if (numba is not None and _env_wants_numba()) else "numpy"


def active_backend() -> str:
    """Name of the backend the dispatchers currently use ("numba" or "numpy")."""
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    if name == "numba" and numba is None:
        raise RuntimeError("numba backend requested but numba is not importable")
    _active = name


def njit(func):
    """Compile ``func`` with nopython+nogil semantics; identity if numba is absent.

    nogil matters: frame-level evaluation threads overlap only while the
    kernels run outside the GIL.
    """
    if numba is None:  # pragma: no cover
        return func
    return numba.njit(cache=True, nogil=True)(func)
