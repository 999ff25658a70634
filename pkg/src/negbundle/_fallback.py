"""Pure-Python versions of the kernels in ``_kernels.pyx``."""

from __future__ import annotations


def structure_mul(a, b, ptr, idx, coef, p):
    """Same contract as the compiled kernel; ``p == 0`` means no reduction."""
    n = len(a)
    out = [0] * n
    nz_b = [(j, bj) for j, bj in enumerate(b) if bj]
    for i, ai in enumerate(a):
        if not ai:
            continue
        base = i * n
        for j, bj in nz_b:
            lo, hi = ptr[base + j], ptr[base + j + 1]
            if lo == hi:
                continue
            ab = ai * bj
            for t in range(lo, hi):
                out[idx[t]] += ab * coef[t]
    if p:
        out = [c % p for c in out]
    return out
