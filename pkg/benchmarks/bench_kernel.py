"""Compare the compiled and pure-Python Monte-Carlo kernels.

Usage: python benchmarks/bench_kernel.py [--samples N] [--threads T]

Both backends produce bit-identical output (asserted here), so the only
difference is throughput.
"""

import argparse
import time

import numpy as np

from sdc import _purekernel
from sdc import kernel

try:
    from sdc import _kernel
except ImportError:
    _kernel = None


def time_call(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=50_000)
    parser.add_argument("--threads", type=int, default=1,
                        help="threads for the facade rows (0 = auto)")
    args = parser.parse_args()

    workloads = [
        ("reach counts  n=11 m=21", "reach_counts", (11, 21, args.samples, 42)),
        ("reach counts  n=4  m=3 ", "reach_counts", (4, 3, args.samples, 42)),
        ("edge subsets  n=4  m=3 ", "edge_subsets", (4, 3, args.samples, 42)),
    ]

    print(f"samples per workload: {args.samples}")
    print(f"{'workload':<26} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for label, name, call_args in workloads:
        pure_time, pure_out = time_call(getattr(_purekernel, name), *call_args)
        if _kernel is None:
            print(f"{label:<26} {pure_time:>9.3f}s {'n/a':>10}")
            continue
        fast_time, fast_out = time_call(getattr(_kernel, name), *call_args)
        assert np.array_equal(pure_out, fast_out), "backends disagree"
        print(f"{label:<26} {pure_time:>9.3f}s {fast_time:>9.3f}s "
              f"{pure_time / fast_time:>8.1f}x")

    if _kernel is not None and args.threads != 1:
        label = "reach counts  n=11 m=21"
        t, _ = time_call(kernel.reach_counts, 11, 21, args.samples, 42,
                         args.threads)
        print(f"{label + f' (threads={args.threads})':<26} {'':>10} {t:>9.3f}s")


if __name__ == "__main__":
    main()
