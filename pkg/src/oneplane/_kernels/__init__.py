"""Hot kernels with an import-time choice of implementation.

The compiled module ``_ckernels`` is used when it was built and imports
cleanly; otherwise the pure-Python ``_pykernels`` stand in. Setting
``ONEPLANE_PURE_PYTHON=1`` forces the fallback. Both expose the same three
functions and are tested for identical output.
"""

from __future__ import annotations

import os

from . import _pykernels

_compiled = None
if os.environ.get("ONEPLANE_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_MAX_BITS = 64


def face_cycles(twin, nxt):
    if _compiled is not None:
        return _compiled.face_cycles(twin, nxt)
    return _pykernels.face_cycles(twin, nxt)


def find_clique(masks, k):
    if _compiled is not None and len(masks) <= _MAX_BITS:
        return _compiled.find_clique(masks, k)
    return _pykernels.find_clique(masks, k)


def max_kfree_edges(n, k):
    if _compiled is not None and n <= _MAX_BITS:
        return _compiled.max_kfree_edges(n, k)
    return _pykernels.max_kfree_edges(n, k)


__all__ = ["BACKEND", "face_cycles", "find_clique", "max_kfree_edges"]
