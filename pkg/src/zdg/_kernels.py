"""Select the compiled kernels when built, else the pure-Python ones.

Set ``ZDG_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from zdg import _pykernels

if os.environ.get("ZDG_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from zdg import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

is_prime = _impl.is_prime
pollard_brent = _impl.pollard_brent
build_csr = _impl.build_csr
component_labels = _impl.component_labels
edge_ids = _impl.edge_ids
hierholzer = _impl.hierholzer

__all__ = [
    "BACKEND",
    "is_prime",
    "pollard_brent",
    "build_csr",
    "component_labels",
    "edge_ids",
    "hierholzer",
]


def compiled_available() -> bool:
    try:
        from zdg import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True
