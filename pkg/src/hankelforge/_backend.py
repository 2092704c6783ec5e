"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
kernels.  ``HF_PURE_PYTHON=1`` forces the pure backend (the benchmark uses
this to compare both on the same machine).
"""
from __future__ import annotations

import os

from . import _core_py


def _select():
    if os.environ.get("HF_PURE_PYTHON") == "1":
        return _core_py, "pure-python"
    try:
        from . import _core  # compiled at install time; optional
    except ImportError:
        return _core_py, "pure-python"
    return _core, "compiled"


kernels, BACKEND = _select()
