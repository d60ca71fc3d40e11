"""Import-time selection of the kernel backend.

The compiled extension is preferred when it imported cleanly; setting
``CHARMONOID_PURE=1`` in the environment forces the pure-Python twins
(useful for debugging and for the backend-comparison benchmark).
"""

import os

if os.environ.get("CHARMONOID_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

solve_minimal = _impl.solve_minimal
member_search = _impl.member_search
