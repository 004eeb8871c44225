"""Kernel backend selection.

The compiled extension is used when available; otherwise the pure-Python
reference implementation takes over. Set PZDYN_KERNEL=pure to force the
fallback (used by the benchmark and the cross-backend tests).
"""

import os

from . import pure

_compiled = None
if os.environ.get("PZDYN_KERNEL", "").lower() not in ("pure", "python"):
    try:
        from . import _core as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"
_impl = _compiled if _compiled is not None else pure

map_orbit = _impl.map_orbit
map_final = _impl.map_final
map_window = _impl.map_window
map_converge_to = _impl.map_converge_to
rk4_orbit = _impl.rk4_orbit
rk4_final = _impl.rk4_final
rk4_min_coords = _impl.rk4_min_coords

__all__ = [
    "BACKEND",
    "map_orbit",
    "map_final",
    "map_window",
    "map_converge_to",
    "rk4_orbit",
    "rk4_final",
    "rk4_min_coords",
    "pure",
]
