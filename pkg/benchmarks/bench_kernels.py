"""Time the numba and numpy flavours of each hot kernel on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Both flavours are imported directly, so TURANSTAB_DISABLE_NUMBA does not
matter here. The first numba call (compilation or cache load) is excluded.
"""

import argparse
import time

import numpy as np

from turanstab import kernels
from turanstab.generators import clique_broken_gnp, perturbed_turan


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def cases():
    for n, p, k in [(200, 4, 500), (1000, 5, 20000)]:
        G = perturbed_turan(n, p, k, seed=1)
        indptr, indices = G.csr
        yield f"majorize n={n}", kernels.majorize_numba, kernels.majorize_numpy, (n, indptr, indices)
    for n, p in [(10, 3), (12, 3), (12, 4)]:
        G = perturbed_turan(n, p, n, seed=2)
        eu, ev = G.edge_arrays
        yield f"rgs_scan n={n} p={p}", kernels.rgs_scan_numba, kernels.rgs_scan_numpy, (n, p, eu, ev)
    for n in (10, 12):
        G = clique_broken_gnp(n, 3, "3/4", seed=3)
        indptr, indices = G.csr
        yield f"first_coloring n={n} k=3", kernels.first_coloring_numba, kernels.first_coloring_numpy, (
            n,
            3,
            indptr,
            indices,
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not kernels.NUMBA_AVAILABLE:
        print("numba is not installed; only the numpy column is meaningful")
    print(f"{'kernel':28} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for name, fast, slow, call_args in cases():
        fast(*call_args)
        t_fast, r_fast = best_of(lambda: fast(*call_args), args.repeat)
        t_slow, r_slow = best_of(lambda: slow(*call_args), args.repeat)
        assert same(r_fast, r_slow), name
        print(f"{name:28} {t_fast:10.4f} {t_slow:10.4f} {t_slow / t_fast:8.1f}x")


if __name__ == "__main__":
    main()
