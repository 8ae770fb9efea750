"""Backend selection: compiled extension if available, pure Python otherwise.

Set FTPROP_PURE_PYTHON=1 to force the fallback (used by the parity tests and
the benchmark).
"""

import os

if os.environ.get("FTPROP_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

PI = _impl.PI
HALF_PI = _impl.HALF_PI
ft_forward = _impl.ft_forward
asin_sqrt = _impl.asin_sqrt
sin_sq = _impl.sin_sq
inverse_raw = _impl.inverse_raw
mpe_at_one = _impl.mpe_at_one
sample_size_real = _impl.sample_size_real
