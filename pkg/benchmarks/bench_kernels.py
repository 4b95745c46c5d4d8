"""Side-by-side timing of the numba and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--sizes 10,20,40,60] [--reps 5]
"""

import argparse
import time

import numpy as np

from pursuit import _kernels as K
from pursuit.generators import random_connected_graph


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="10,20,40,60")
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--horizon", type=int, default=64)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if K.numba is None:
        print("numba is not installed; nothing to compare")
        return

    print(f"{'kernel':<16}{'n':>5}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for n in sizes:
        G = random_connected_graph(n, seed=n)
        adj = G.adjacency_matrix()
        allowed = np.ones(n, dtype=np.bool_)

        K._tables_numba(adj)  # warm the JIT outside the timed region
        t_nb = _time(lambda: K._tables_numba(adj), args.reps)
        t_np = _time(lambda: K._tables_numpy(adj), args.reps)
        print(f"{'game tables':<16}{n:>5}{t_nb * 1e3:>10.2f}ms{t_np * 1e3:>10.2f}ms"
              f"{t_np / t_nb:>9.1f}x")

        K._survive_numba(adj, allowed, allowed, args.horizon)
        s_nb = _time(lambda: K._survive_numba(adj, allowed, allowed, args.horizon), args.reps)
        s_np = _time(lambda: K._survive_numpy(adj, allowed, allowed, args.horizon), args.reps)
        print(f"{'survival DP':<16}{n:>5}{s_nb * 1e3:>10.2f}ms{s_np * 1e3:>10.2f}ms"
              f"{s_np / s_nb:>9.1f}x")


if __name__ == "__main__":
    main()
