#!/usr/bin/env python3
"""Benchmark the compiled series kernel against the pure-Python fallback.

Times the series sum over boundary-sample batches at each of the nine
reference seeds (the hot loop of a reproduction run) and reports per-call
times and the speedup.  Run:

    python benchmarks/bench_kernels.py [repeats]
"""

import math
import sys
import time

from qzeta._kernels.fallback import sharp_series_sum as python_sum

try:
    from qzeta._kernels._series import sharp_series_sum as compiled_sum
except ImportError:
    compiled_sum = None

SEEDS = [
    (0.130263 + 14.1465j, 290),
    (0.35044 + 21.0771j, 290),
    (0.574478 + 24.9643j, 290),
    (0.913386 + 30.4077j, 290),
    (1.09982 + 33.0854j, 290),
    (1.76753 + 38.1895j, 387),
    (1.9141 + 40.7816j, 387),
    (2.44967 + 43.3138j, 387),
    (3.11028 + 47.5578j, 387),
]


def boundary_batch(center, half_width=0.05, per_side=9):
    points = []
    for side in range(4):
        for i in range(per_side):
            t = i / per_side
            corner = center - half_width - 0.5j * half_width
            if side == 0:
                points.append(corner + 2 * half_width * t)
            elif side == 1:
                points.append(corner + 2 * half_width + 1j * half_width * t)
            elif side == 2:
                points.append(corner + 2 * half_width * (1 - t) + 1j * half_width)
            else:
                points.append(corner + 1j * half_width * (1 - t))
    return points


def run(kernel, repeats):
    calls = 0
    start = time.perf_counter()
    sink = 0.0
    for _ in range(repeats):
        for center, n_terms in SEEDS:
            for k in boundary_batch(center):
                sink += math.copysign(1.0, kernel(k, 750.0, 2.0, n_terms).real)
                calls += 1
    elapsed = time.perf_counter() - start
    return elapsed, calls, sink


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    print(f"series-kernel benchmark: {repeats} sweeps over 9 seeds x 36 points")
    py_time, calls, _ = run(python_sum, repeats)
    print(f"  python   : {py_time:8.3f}s total, {1e6 * py_time / calls:8.1f} us/call")
    if compiled_sum is None:
        print("  compiled : not built (pure-Python install)")
        return
    c_time, _, _ = run(compiled_sum, repeats)
    print(f"  compiled : {c_time:8.3f}s total, {1e6 * c_time / calls:8.1f} us/call")
    print(f"  speedup  : {py_time / c_time:.1f}x")
    probe = 0.5 + 20j
    fast = compiled_sum(probe, 750.0, 2.0, 290)
    slow = python_sum(probe, 750.0, 2.0, 290)
    print(f"  agreement at a benign point: {abs(fast - slow) / abs(slow):.2e} relative")


if __name__ == "__main__":
    main()
