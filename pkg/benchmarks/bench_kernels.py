"""Compare the compiled kernel backend against the NumPy fallback.

Times cycle_weight_sum on single rank vectors and batch_cycle_weight_sums
on permutation blocks (the permutation-test inner loop), plus the full
statistic pipeline. Run as:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from circxi import CircularSample, cyclic_rank_profile
from circxi import _kernels_py
from circxi.kernels import BACKEND, batch_cycle_weight_sums, cycle_weight_sum


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.2f} s "


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"active backend: {BACKEND}")
    if BACKEND != "compiled":
        print("note: compiled extension unavailable, comparing fallback to itself")

    print("\nscalar cycle_weight_sum")
    print(f"{'n':>10} {'compiled':>12} {'numpy':>12} {'speedup':>9}")
    for n in (1_000, 10_000, 100_000, 1_000_000):
        r = np.ascontiguousarray(rng.permutation(n).astype(np.int64))
        t_c = best_of(lambda: cycle_weight_sum(r), args.repeats)
        t_p = best_of(lambda: _kernels_py.cycle_weight_sum(r), args.repeats)
        print(f"{n:>10} {fmt(t_c):>12} {fmt(t_p):>12} {t_p / t_c:>8.1f}x")

    print("\nbatch_cycle_weight_sums (B x n permutation block)")
    print(f"{'B x n':>14} {'compiled':>12} {'numpy':>12} {'speedup':>9}")
    for B, n in ((499, 200), (499, 1000), (2000, 500)):
        perms = rng.permuted(np.tile(np.arange(n, dtype=np.int64), (B, 1)), axis=1)
        perms = np.ascontiguousarray(perms)
        t_c = best_of(lambda: batch_cycle_weight_sums(perms), args.repeats)
        t_p = best_of(lambda: _kernels_py.batch_cycle_weight_sums(perms), args.repeats)
        print(f"{B:>6} x {n:<5} {fmt(t_c):>12} {fmt(t_p):>12} {t_p / t_c:>8.1f}x")

    print("\nfull statistic pipeline (sorting included)")
    print(f"{'n':>10} {'time':>12}")
    for n in (10_000, 100_000, 1_000_000):
        sample = CircularSample(rng.uniform(0, 1, n), rng.uniform(0, 1, n))
        t = best_of(lambda: cyclic_rank_profile(sample), args.repeats)
        print(f"{n:>10} {fmt(t):>12}")


if __name__ == "__main__":
    main()
