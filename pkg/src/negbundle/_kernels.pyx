# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled structure-constant multiplication over F_p.

The product of two basis vectors ``e_i * e_j`` is stored in CSR form:
entries ``ptr[i*N + j] .. ptr[i*N + j + 1]`` of ``idx``/``coef`` give the
normal form of the product. All inputs are residues in ``[0, p)`` and
``p < 2**31`` so that no intermediate product overflows.
"""

from libc.stdint cimport int64_t

import numpy as np


def structure_mul(const int64_t[::1] a, const int64_t[::1] b,
                  const int64_t[::1] ptr, const int64_t[::1] idx,
                  const int64_t[::1] coef, int64_t p):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, t, base
    cdef int64_t ai, ab
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        base = i * n
        for j in range(n):
            if b[j] == 0:
                continue
            ab = (ai * b[j]) % p
            for t in range(ptr[base + j], ptr[base + j + 1]):
                o[idx[t]] = (o[idx[t]] + ab * coef[t]) % p
    return out
