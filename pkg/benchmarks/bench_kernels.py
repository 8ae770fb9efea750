#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeat R]
"""

import argparse
import math
import time

from ftprop import _kernels_py

try:
    from ftprop import _kernels
except ImportError:
    _kernels = None


def bench(label, func, args_list, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        for args in args_list:
            func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    n = args.points
    forward_args = [(i / (n - 1), 1.0 + i % 500) for i in range(n)]
    lo, hi = 0.05, math.pi / 2 - 0.05
    inverse_args = [
        (lo + (hi - lo) * i / (n - 1), 1.0 + i % 500) for i in range(n)
    ]

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))

    print(f"{n} evaluations per call, best of {args.repeat} runs\n")
    print(f"{'kernel':<14}{'backend':<10}{'time [s]':>10}{'Meval/s':>10}")
    results = {}
    for kernel_name, attr, calls in [
        ("ft_forward", "ft_forward", forward_args),
        ("inverse_raw", "inverse_raw", inverse_args),
        ("mpe_at_one", "mpe_at_one", [(a[1],) for a in forward_args]),
    ]:
        for backend_name, mod in backends:
            elapsed = bench(kernel_name, getattr(mod, attr), calls, args.repeat)
            results[(kernel_name, backend_name)] = elapsed
            print(f"{kernel_name:<14}{backend_name:<10}{elapsed:>10.4f}"
                  f"{n / elapsed / 1e6:>10.2f}")
        if _kernels is not None:
            ratio = (results[(kernel_name, 'python')]
                     / results[(kernel_name, 'compiled')])
            print(f"{'':<14}{'speedup':<10}{ratio:>10.2f}x")
        print()


if __name__ == "__main__":
    main()
