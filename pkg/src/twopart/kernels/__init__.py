"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module ``_ckernels`` is used when it imports; setting
``TWOPART_PURE_PYTHON=1`` forces the fallback.  ``color_order`` always comes
from the Python module since it only runs once per root.
"""

from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import color_order

_FORCE_PURE = os.environ.get("TWOPART_PURE_PYTHON", "") not in ("", "0")

_compiled = None
if not _FORCE_PURE:
    try:
        from . import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
FMASK_MAX_N = 6


def backend_module(name: str | None = None):
    """Kernel module for ``name`` ("cython", "python"), or the active one."""
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


CliqueKernel = backend_module().CliqueKernel


def delta_fmask(fmask: int, n: int) -> int:
    if _compiled is not None and n <= FMASK_MAX_N:
        return _compiled.delta_fmask(fmask, n)
    return _pykernels.delta_fmask(fmask, n)


def meet_join_fmask(f: int, g: int, n: int) -> tuple[int, int]:
    if _compiled is not None and n <= FMASK_MAX_N:
        return _compiled.meet_join_fmask(f, g, n)
    return _pykernels.meet_join_fmask(f, g, n)


__all__ = [
    "BACKEND",
    "CliqueKernel",
    "available_backends",
    "backend_module",
    "color_order",
    "delta_fmask",
    "meet_join_fmask",
]
