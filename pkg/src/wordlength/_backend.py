"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the
pure-Python fallback is used otherwise, or when WORDLENGTH_PURE is set in
the environment.  Both expose the same functions and produce bit-identical
results, so everything above this module is backend-agnostic.
"""

import os

if os.environ.get("WORDLENGTH_PURE"):
    from wordlength import _kernels_py as kernels
else:
    try:
        from wordlength import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from wordlength import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND_NAME: str = kernels.BACKEND_NAME
