"""Kernel compilation switch.

Hot inner loops (simplex pivoting, SVM dual coordinate descent) are written
once in nopython-compatible style and compiled with numba unless the
environment variable POOLBID_NO_NUMBA is set to a non-empty value, in which
case the same functions run as plain Python/numpy. Both paths execute the
identical source, so results agree bit for bit given the same LAPACK.
"""

import os

USE_NUMBA = not os.environ.get("POOLBID_NO_NUMBA")

if USE_NUMBA:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if USE_NUMBA:
    def jit_kernel(func):
        return _njit(cache=True)(func)
else:
    def jit_kernel(func):
        return func
