"""Kernel lane selection.

Imports the compiled kernels when available, falling back to the pure
Python implementations.  Set IMMERGRAPH_KERNEL=pure or =compiled to force
a lane; forcing an unavailable lane raises at import time.
"""

from __future__ import annotations

import os

from . import _pure

_choice = os.environ.get("IMMERGRAPH_KERNEL", "").strip().lower()

if _choice == "pure":
    _impl = _pure
elif _choice == "compiled":
    from . import _speedups as _impl  # noqa: F401
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _pure

KERNEL_NAME = _impl.KERNEL_NAME

MODE_ANY = _pure.MODE_ANY
MODE_SEP = _pure.MODE_SEP
MODE_NONSEP = _pure.MODE_NONSEP
MODE_NOROOT = _pure.MODE_NOROOT

degree_list = _impl.degree_list
cut_size_mask = _impl.cut_size_mask
max_flow = _impl.max_flow
min_cut = _impl.min_cut
find_violated_cut = _impl.find_violated_cut
canonical_bytes = _impl.canonical_bytes
immerses = _impl.immerses
