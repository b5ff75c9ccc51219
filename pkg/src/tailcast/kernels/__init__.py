"""Hot-kernel dispatch: compiled extension when built, numpy otherwise.

``BACKEND`` records which implementation is active ("cython" or
"python").  Set TAILCAST_BACKEND=python to force the fallback, or
TAILCAST_BACKEND=cython to require the extension (ImportError if it
was not built).
"""

import os

from . import pure

_requested = os.environ.get("TAILCAST_BACKEND", "").strip().lower()

if _requested in ("python", "pure"):
    _impl = pure
    BACKEND = "python"
else:
    try:
        from . import _ctail as _impl

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _impl = pure
        BACKEND = "python"

ks_scan = _impl.ks_scan
path_logpost = _impl.path_logpost
path_grad = _impl.path_grad

__all__ = ["BACKEND", "ks_scan", "path_logpost", "path_grad", "pure"]
