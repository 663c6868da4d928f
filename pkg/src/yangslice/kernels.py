"""Kernel selection: the compiled extension when built, else pure Python.

Set ``YANGSLICE_PURE=1`` to force the fallback (used by the benchmark and by
the test that checks both backends agree).
"""

import os

from ._kernels_py import BITS, FIELD

if os.environ.get("YANGSLICE_PURE") == "1":
    from ._kernels_py import poly_mul, poly_shift

    COMPILED = False
else:
    try:
        from ._kernels import poly_mul, poly_shift

        COMPILED = True
    except ImportError:
        from ._kernels_py import poly_mul, poly_shift

        COMPILED = False

__all__ = ["BITS", "FIELD", "COMPILED", "poly_mul", "poly_shift"]
