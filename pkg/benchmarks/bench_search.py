#!/usr/bin/env python3
"""Benchmark the compiled branch-and-bound kernel against the pure fallback.

Both kernels explore identical node sequences, so the comparison isolates
interpreter overhead.  Results are checked for agreement before timing is
reported.

Usage:
    python benchmarks/bench_search.py               # preset instance list
    python benchmarks/bench_search.py --n 6 --r 3 --k 6 --repeat 3
"""

from __future__ import annotations

import argparse
import time

from rblab import _kernel_py
from rblab.search import bnb_optimum

try:
    from rblab import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

PRESET = [
    (4, 3, 3),
    (5, 4, 6),
    (5, 4, 7),
    (6, 3, 6),
    (6, 4, 9),
    (7, 3, 4),
]


def time_kernel(kernel, n, r, k, repeat):
    best = None
    report = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = bnb_optimum(n, r, k, kernel=kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    instances = PRESET
    if args.n is not None:
        if args.r is None or args.k is None:
            parser.error("--n requires --r and --k")
        instances = [(args.n, args.r, args.k)]

    if _kernel_c is None:
        print("compiled kernel not built; timing the pure kernel only")

    header = f"{'instance':>14} {'nodes':>10} {'pure[s]':>9}"
    if _kernel_c is not None:
        header += f" {'compiled[s]':>12} {'speedup':>8}"
    print(header)
    for n, r, k in instances:
        t_py, rep_py = time_kernel(_kernel_py, n, r, k, args.repeat)
        line = f"({n:>2},{r:>2},{k:>2})    {rep_py.nodes_explored:>10} {t_py:>9.4f}"
        if _kernel_c is not None:
            t_c, rep_c = time_kernel(_kernel_c, n, r, k, args.repeat)
            assert rep_c.optimum == rep_py.optimum
            assert rep_c.nodes_explored == rep_py.nodes_explored
            line += f" {t_c:>12.4f} {t_py / max(t_c, 1e-9):>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
