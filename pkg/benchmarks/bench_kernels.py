#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--full]

Times the three kernel entry points on random tournaments and prints one
table row per (kernel, n) with the speedup factor.  --full adds sizes where
the pure backend is left far behind (census at n = 64 is ~7.6e6 subsets).
"""

import argparse
import time

from tourncount import build_class_table
from tourncount import _kernels_py as pure
from tourncount._patterns import hamiltonian_table
from tourncount.core import random_tournament

try:
    from tourncount import _kernels_cy as compiled
except ImportError:
    compiled = None


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(label, n, repeat, fn_name, *args):
    pure_fn = getattr(pure, fn_name)
    t_pure, r_pure = best_of(repeat, pure_fn, *args)
    if compiled is None:
        print(f"{label:22s} n={n:<4d} pure {t_pure * 1e3:9.2f} ms   (no extension)")
        return
    comp_fn = getattr(compiled, fn_name)
    t_comp, r_comp = best_of(repeat, comp_fn, *args)
    assert r_pure == r_comp, f"backend mismatch in {label} at n={n}"
    print(
        f"{label:22s} n={n:<4d} pure {t_pure * 1e3:9.2f} ms   "
        f"cython {t_comp * 1e3:8.2f} ms   x{t_pure / t_comp:7.1f}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="add larger sizes")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels unavailable; showing pure timings only")

    ham5 = hamiltonian_table(5)
    labels = build_class_table().class_of_pattern

    edge_ns = [64, 128, 256] + ([512] if args.full else [])
    subset_ns = [16, 24, 32] + ([48, 64] if args.full else [])

    print("-- per-arc score sums (5-cycle formula) --")
    for n in edge_ns:
        t = random_tournament(n, 0.5, seed=n)
        bench("edge_sums", n, 3, "edge_sums", t.rows, n)

    print("-- 5-subset table sum (brute-force 5-cycles) --")
    for n in subset_ns:
        t = random_tournament(n, 0.5, seed=n)
        bench("subset_table_sum k=5", n, 3, "subset_table_sum", t.rows, n, 5, ham5)

    print("-- 5-subset census histogram --")
    for n in subset_ns:
        t = random_tournament(n, 0.5, seed=n)
        bench("label_histogram5", n, 3, "label_histogram5", t.rows, n, labels, 12)


if __name__ == "__main__":
    main()
