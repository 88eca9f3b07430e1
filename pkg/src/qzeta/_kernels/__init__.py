"""Series-kernel selection: compiled extension when available, else Python.

Set QZETA_PURE_PYTHON=1 to force the fallback (used by the benchmark and for
debugging backend differences).
"""

import os

if os.environ.get("QZETA_PURE_PYTHON"):
    from .fallback import sharp_series_sum

    BACKEND = "python"
else:
    try:
        from ._series import sharp_series_sum  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from .fallback import sharp_series_sum  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["sharp_series_sum", "BACKEND"]
