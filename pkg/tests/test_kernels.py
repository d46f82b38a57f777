import os
import subprocess
import sys
from itertools import product

import numpy as np
from hypothesis import given

from turanstab import kernels
from turanstab.generators import perturbed_turan

from .helpers import graphs


def _brute_scan(G, p):
    """Naive p^n enumeration with the same lexicographic tie-break on canonical strings."""
    best_internal, best_ed = None, None
    for labels in product(range(p), repeat=G.n):
        internal = sum(labels[u] == labels[v] for u, v in G.edges)
        sizes = [labels.count(b) for b in range(p)]
        same = sum(a * (a - 1) // 2 for a in sizes)
        ed = 2 * internal + (G.n * (G.n - 1) // 2 - same) - G.m
        if best_internal is None or internal < best_internal:
            best_internal = internal
        if best_ed is None or ed < best_ed:
            best_ed = ed
    return best_internal, best_ed


def _bell_restricted(n, p):
    # number of set partitions of n elements into at most p blocks
    table = [[0] * (p + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for k in range(1, p + 1):
            table[i][k] = k * table[i - 1][k] + table[i - 1][k - 1]
    return sum(table[n]) if n else 1


def test_rgs_matrix_enumerates_each_partition_once():
    for n in range(0, 8):
        for p in range(1, 5):
            codes = kernels.rgs_matrix(n, p)
            assert codes.shape == (_bell_restricted(n, p), n)
            rows = [tuple(r) for r in codes.tolist()]
            assert rows == sorted(rows)
            assert len(set(rows)) == len(rows)
            for r in rows:
                top = -1
                for x in r:
                    assert x <= top + 1 and x < p
                    top = max(top, x)


@given(graphs(max_n=7))
def test_rgs_scan_flavours_agree_with_brute_force(G):
    eu, ev = G.edge_arrays
    for p in (1, 2, 3):
        a = kernels.rgs_scan_numba(G.n, p, eu, ev)
        b = kernels.rgs_scan_numpy(G.n, p, eu, ev)
        assert a[0] == b[0] and a[2] == b[2] and a[4] == b[4]
        assert np.array_equal(a[1], b[1]) and np.array_equal(a[3], b[3])
        assert (a[0], a[2]) == _brute_scan(G, p)


@given(graphs(max_n=9))
def test_majorize_flavours_agree(G):
    indptr, indices = G.csr
    a = kernels.majorize_numba(G.n, indptr, indices)
    b = kernels.majorize_numpy(G.n, indptr, indices)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def test_majorize_flavours_agree_on_large_graph():
    G = perturbed_turan(400, 5, 3000, seed=11)
    indptr, indices = G.csr
    a = kernels.majorize_numba(G.n, indptr, indices)
    b = kernels.majorize_numpy(G.n, indptr, indices)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def _brute_first_coloring(G, k):
    for labels in product(range(k), repeat=G.n):
        if all(labels[u] != labels[v] for u, v in G.edges):
            return list(labels)
    return None


@given(graphs(min_n=1, max_n=7))
def test_first_coloring_flavours_agree_with_brute_force(G):
    indptr, indices = G.csr
    for k in (1, 2, 3, 4):
        fa, ca = kernels.first_coloring_numba(G.n, k, indptr, indices)
        fb, cb = kernels.first_coloring_numpy(G.n, k, indptr, indices)
        expected = _brute_first_coloring(G, k)
        assert fa == fb == (expected is not None)
        if fa:
            # lexicographically first overall is also restricted-growth
            assert ca.tolist() == cb.tolist() == expected


def test_env_flag_selects_numpy():
    code = "import turanstab.kernels as k; print(k.backend())"
    env = dict(os.environ, TURANSTAB_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
    env["TURANSTAB_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == ("numba" if kernels.NUMBA_AVAILABLE else "numpy")
