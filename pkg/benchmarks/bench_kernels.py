"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--lengths 100 200 400] [--repeat 5]

Each kernel runs on the same random DNA pair in both implementations; the
table lists the best-of-``repeat`` time per call and the speedup.  A final
row times a short node-limited solve under each implementation (the solver
is run in a subprocess with MCSP_PURE_PYTHON set for the fallback).
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from mcsp.datagen import gen_random_pair
from mcsp.kernels import native_impl, python_impl

SOLVE_SNIPPET = (
    "import time; from mcsp.datagen import gen_random_pair; from mcsp.solver import solve_exact; "
    "p = gen_random_pair({n}, b'ACGT', 1); t = time.perf_counter(); "
    "solve_exact(p, node_limit={nodes}); print(time.perf_counter() - t)"
)


def best_time(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05 and number < 1_000_000:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def kernel_calls(impl, x: bytes, y: bytes):
    n = len(x)
    ext = impl.extension_table(x, y)
    free = np.ones(n, dtype=np.uint8)
    half = free.copy()
    half[::3] = 0
    return {
        "extension_table": lambda: impl.extension_table(x, y),
        "free_runs": lambda: impl.free_runs(half),
        "placement_limits": lambda: impl.placement_limits(ext, n // 3, half),
        "suffix_bound": lambda: impl.suffix_bound(ext, n // 3, half),
        "longest_free_common": lambda: impl.longest_free_common(ext, free, half),
    }


def timed_solve(n: int, nodes: int, pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["MCSP_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SOLVE_SNIPPET.format(n=n, nodes=nodes)],
                         env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lengths", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--solve-nodes", type=int, default=2000)
    args = ap.parse_args(argv)

    if native_impl is None:
        print("compiled kernels are not built; reinstall without MCSP_NO_EXT", file=sys.stderr)
        return 1

    print(f"{'n':>5}  {'kernel':<20} {'numpy (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for n in args.lengths:
        pair = gen_random_pair(n, b"ACGT", 1)
        slow = kernel_calls(python_impl, pair.x, pair.y)
        fast = kernel_calls(native_impl, pair.x, pair.y)
        for name in slow:
            t_py = best_time(slow[name], args.repeat) * 1e6
            t_c = best_time(fast[name], args.repeat) * 1e6
            print(f"{n:>5}  {name:<20} {t_py:>12.1f} {t_c:>12.1f} {t_py / t_c:>7.1f}x")
        t_py = timed_solve(n, args.solve_nodes, pure=True) * 1e6
        t_c = timed_solve(n, args.solve_nodes, pure=False) * 1e6
        print(f"{n:>5}  {'solve (' + str(args.solve_nodes) + ' nodes)':<20} {t_py:>12.0f} {t_c:>12.0f} "
              f"{t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
