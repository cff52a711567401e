"""Global scalar precision switch.

Training runs in float32; gradient verification against finite differences
needs float64. The active dtype is process-global and applies to every tensor
created after the switch. Use :func:`using` to scope a temporary change.
"""

from __future__ import annotations

import contextlib

import numpy as np

_DTYPES = {"f32": np.float32, "f64": np.float64}

_active = np.float32


def set_precision(name: str) -> None:
    """Set the global scalar dtype. ``name`` is ``"f32"`` or ``"f64"``."""
    global _active
    if name not in _DTYPES:
        raise ValueError(f"unknown precision {name!r}, expected one of {sorted(_DTYPES)}")
    _active = _DTYPES[name]


def dtype() -> np.dtype:
    """The numpy dtype new tensors are created with."""
    return _active


def precision_name() -> str:
    return "f32" if _active == np.float32 else "f64"


@contextlib.contextmanager
def using(name: str):
    """Temporarily switch precision, e.g. ``with precision.using("f64"): ...``."""
    previous = precision_name()
    set_precision(name)
    try:
        yield
    finally:
        set_precision(previous)
