"""Kernel selection: the compiled extension if it was built, else pure Python.

Set ``IDSLEARN_PURE`` to anything but ``0`` or empty to force the Python kernels.
"""
import os

if os.environ.get("IDSLEARN_PURE", "0") not in ("", "0"):
    from ._pykernels import accept_bits, accept_mask, walk, walk_many

    BACKEND = "python"
else:
    try:
        from ._ckernels import accept_bits, accept_mask, walk, walk_many

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import accept_bits, accept_mask, walk, walk_many

        BACKEND = "python"

__all__ = ["BACKEND", "accept_bits", "accept_mask", "walk", "walk_many"]
