"""Selects the kernel backend at import time.

The compiled extension (maxbisect._speedups) is preferred when present; the
pure-Python module (maxbisect._kernels_py) is the fallback. Set the
environment variable MAXBISECT_BACKEND to "python" or "cython" to force one;
"cython" raises if the extension was not built.
"""

from __future__ import annotations

import os
from types import ModuleType

from maxbisect import _kernels_py


def _load(choice: str) -> ModuleType:
    if choice == "python":
        return _kernels_py
    try:
        from maxbisect import _speedups
    except ImportError:
        if choice == "cython":
            raise ImportError(
                "MAXBISECT_BACKEND=cython but the compiled extension is not built; "
                "reinstall with Cython available"
            ) from None
        return _kernels_py
    return _speedups


_choice = os.environ.get("MAXBISECT_BACKEND", "auto").lower()
if _choice not in ("auto", "python", "cython"):
    raise ImportError(f"MAXBISECT_BACKEND must be auto, python or cython, not {_choice!r}")

kernels = _load(_choice)
BACKEND: str = kernels.BACKEND_NAME

matching_scan = kernels.matching_scan
greedy_assign = kernels.greedy_assign
random_assign = kernels.random_assign
best_bisection = kernels.best_bisection
