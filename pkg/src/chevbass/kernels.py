"""Kernel selection: the compiled extension when it was built, else Python.

Both backends return identical results; the compiled one only accepts
moduli below ``2**31`` and larger inputs are routed to Python.
"""

from __future__ import annotations

from . import _pykernels as python

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

BACKEND = "cython" if compiled is not None else "python"

_C_LIMIT = 1 << 31


def bsgs(g: int, y: int, n: int, order: int) -> int:
    if compiled is not None and n < _C_LIMIT:
        return compiled.bsgs(g, y, n, order)
    return python.bsgs(g, y, n, order)


def local_smith(rows, ncols: int, p: int, t: int):
    if compiled is not None and p**t < _C_LIMIT:
        return compiled.local_smith(rows, ncols, p, t)
    return python.local_smith(rows, ncols, p, t)
