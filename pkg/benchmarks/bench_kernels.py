"""Compare the compiled and pure-Python structure-constant products.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from negbundle.cohomology_rings import borel_ring, flag_ring
from negbundle.fields import GF
from negbundle.kernels import compiled_available, structure_mul


def bench(R, p, repeat, backend):
    rng = np.random.default_rng(0)
    N = len(R.basis)
    table = R.table
    pairs = [(rng.integers(0, p, N).tolist(), rng.integers(0, p, N).tolist()) for _ in range(repeat)]
    t0 = time.perf_counter()
    for a, b in pairs:
        structure_mul(a, b, table, p, backend)
    return (time.perf_counter() - t0) / repeat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if not compiled_available():
        print("compiled extension not built; only the Python timing is shown")
    cases = [
        ("flag n=3 F_7", flag_ring(3, GF(7)), 7),
        ("flag n=5 F_5", flag_ring(5, GF(5)), 5),
        ("flag n=7 F_3", flag_ring(7, GF(3)), 3),
        ("borel n=3 F_2 cap 30", borel_ring(3, 2, False, 30), 2),
    ]
    print(f"{'ring':24s} {'dim':>5s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, R, p in cases:
        R.table  # build outside the timed region
        py = bench(R, p, args.repeat, "python")
        if compiled_available():
            cy = bench(R, p, args.repeat, "cython")
            print(f"{label:24s} {len(R.basis):5d} {py * 1e3:10.3f} {cy * 1e3:10.3f} {py / cy:8.1f}x")
        else:
            print(f"{label:24s} {len(R.basis):5d} {py * 1e3:10.3f} {'-':>10s}")


if __name__ == "__main__":
    main()
