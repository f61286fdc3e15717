"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--q 4] [--n 9] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hfbound import _kernels_py as py
from hfbound.kernels import hf_matrix

try:
    from hfbound import _ckernels as cy
except ImportError:
    cy = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled backend not built; only the fallback is available")
    words = hf_matrix(args.q, args.n)
    centers = words[:: max(1, len(words) // 200)]
    small = hf_matrix(args.q, min(args.n, 7))
    cases = [
        ("profiles_all", lambda m: m.profiles_all(words, args.q)),
        ("distance_histograms", lambda m: m.distance_histograms(centers, words)),
        ("greedy_indices d=3", lambda m: m.greedy_indices(small, 3)),
    ]
    print(f"q={args.q} n={args.n} |C|={len(words)}")
    print(f"{'kernel':<22}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, run in cases:
        tp, out_p = best_of(lambda: run(py), args.repeat)
        if cy is None:
            print(f"{name:<22}{tp:>10.4f}{'-':>10}{'-':>9}")
            continue
        tc, out_c = best_of(lambda: run(cy), args.repeat)
        same = np.array_equal(np.asarray(out_p, dtype=object), np.asarray(out_c, dtype=object))
        flag = "" if same else "  OUTPUT MISMATCH"
        print(f"{name:<22}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x{flag}")


if __name__ == "__main__":
    main()
