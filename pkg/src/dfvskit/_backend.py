"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure
Python kernels. Set ``DFVSKIT_PURE=1`` to force the fallback.
"""
import os

from . import _kernels_py

kernels = _kernels_py
if os.environ.get("DFVSKIT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels_c as kernels  # noqa: F811
    except ImportError:  # pragma: no cover - depends on build
        kernels = _kernels_py


def available():
    """Return every importable backend module, fallback first."""
    out = [_kernels_py]
    try:
        from . import _kernels_c
    except ImportError:  # pragma: no cover
        return out
    out.append(_kernels_c)
    return out


def use(name):
    """Switch the active backend (``"python"`` or ``"cython"``); returns the previous name."""
    global kernels
    previous = kernels.NAME
    for mod in available():
        if mod.NAME == name:
            kernels = mod
            return previous
    raise ValueError(f"kernel backend {name!r} is not available")
