"""Kernel backend selection.

Prefers the compiled Cython extension and falls back to the NumPy
implementation.  Set WAVESUM_BACKEND=numpy (or =cython) to force a choice;
forcing cython on a host without the extension is a configuration error.
Both backends produce bitwise-identical coefficients.
"""

from __future__ import annotations

import os

from ..errors import ConfigError
from . import _kernels_py

_forced = os.environ.get("WAVESUM_BACKEND", "").strip().lower()

if _forced in ("", "cython"):
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        if _forced == "cython":
            raise ConfigError(
                "WAVESUM_BACKEND=cython but the compiled extension is not installed"
            ) from None
        _impl = _kernels_py
elif _forced == "numpy":
    _impl = _kernels_py
else:
    raise ConfigError(f"unknown WAVESUM_BACKEND value {_forced!r}")

BACKEND_NAME: str = _impl.BACKEND
analysis_step = _impl.analysis_step
synthesis_step = _impl.synthesis_step
