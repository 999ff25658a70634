"""Kernel selection.

The Cython extension is used when it was built and ``NEGBUNDLE_PURE_PYTHON``
is unset; otherwise the pure-Python fallback runs. Both produce identical
results. The compiled path only handles prime fields with ``p < 2**31``.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

try:
    from ._kernels import structure_mul as _compiled_structure_mul
except ImportError:  # extension not built
    _compiled_structure_mul = None

_P_LIMIT = 2**31

BACKEND = (
    "cython"
    if _compiled_structure_mul is not None and not os.environ.get("NEGBUNDLE_PURE_PYTHON")
    else "python"
)


def compiled_available() -> bool:
    return _compiled_structure_mul is not None


def structure_mul(a, b, table, p: int, backend: str | None = None):
    """Multiply dense coefficient vectors ``a`` and ``b`` using ``table``.

    ``table`` is a :class:`StructureTable`; ``p == 0`` selects exact
    rational arithmetic (always pure Python).
    """
    backend = backend or BACKEND
    if p and backend == "cython" and p < _P_LIMIT and _compiled_structure_mul is not None:
        av = np.asarray(a, dtype=np.int64)
        bv = np.asarray(b, dtype=np.int64)
        return _compiled_structure_mul(av, bv, table.ptr, table.idx, table.coef_mod(p), p).tolist()
    if p:
        return _fallback.structure_mul(a, b, table.ptr_list, table.idx_list, table.coef_mod_list(p), p)
    return _fallback.structure_mul(a, b, table.ptr_list, table.idx_list, table.coef_list, 0)


class StructureTable:
    """CSR storage of the normal forms of all products of basis monomials."""

    def __init__(self, ptr: list[int], idx: list[int], coef: list[int]):
        self.ptr_list = ptr
        self.idx_list = idx
        self.coef_list = coef
        self.ptr = np.asarray(ptr, dtype=np.int64)
        self.idx = np.asarray(idx, dtype=np.int64)
        self._mod: dict[int, np.ndarray] = {}
        self._mod_list: dict[int, list[int]] = {}

    def coef_mod(self, p: int) -> np.ndarray:
        if p not in self._mod:
            self._mod[p] = np.asarray(self.coef_mod_list(p), dtype=np.int64)
        return self._mod[p]

    def coef_mod_list(self, p: int) -> list[int]:
        if p not in self._mod_list:
            self._mod_list[p] = [c % p for c in self.coef_list]
        return self._mod_list[p]
