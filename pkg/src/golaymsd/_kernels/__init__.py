"""Kernel selection: compiled extension when available, NumPy fallback otherwise.

Set GOLAYMSD_PURE=1 to force the fallback (used by the parity tests and the
benchmark).  Both backends return identical integer tables.
"""
from __future__ import annotations

import os

from . import pure

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

_FORCE_PURE = bool(os.environ.get("GOLAYMSD_PURE"))

# the compiled pattern counter uses a dense accumulator of size
# (n+1)**n_classes; beyond this many classes the NumPy path is the right tool
_MAX_CORE_CLASSES = 4


def backend_name() -> str:
    return "pure-python" if (_core is None or _FORCE_PURE) else "cython"


def pattern_counts(amat, bmat, az, bz, ax, bx, class_tables, n_classes, d):
    if _core is not None and not _FORCE_PURE and n_classes <= _MAX_CORE_CLASSES:
        return _core.pattern_counts(amat, bmat, az, bz, ax, bx,
                                    class_tables, n_classes, d)
    return pure.pattern_counts(amat, bmat, az, bz, ax, bx,
                               class_tables, n_classes, d)


def pauli_pair_tables(words, n):
    if _core is not None and not _FORCE_PURE:
        return _core.pauli_pair_tables(words, n)
    return pure.pauli_pair_tables(words, n)
