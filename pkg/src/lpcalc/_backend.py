"""Kernel backend selection.

The compiled kernel is preferred when importable; setting LPCALC_PURE=1
forces the pure-Python twin.  Both expose the same functions on the same
data layout and produce identical results.
"""

import os

from . import _kernel_py

if os.environ.get("LPCALC_PURE"):
    kernel = _kernel_py
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _kernel_py

BACKEND = kernel.BACKEND


def available_backends():
    """Importable kernel modules keyed by name (for benchmarks/tests)."""
    out = {_kernel_py.BACKEND: _kernel_py}
    try:
        from . import _kernel

        out[_kernel.BACKEND] = _kernel
    except ImportError:
        pass
    return out
