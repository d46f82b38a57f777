"""Hot numeric loops, each in a numba and a pure-numpy flavour.

The numba versions are used when numba imports and ``TURANSTAB_DISABLE_NUMBA``
is unset (or ``0``). Both flavours are always importable under explicit names
(``*_numba`` / ``*_numpy``) so tests can check them against each other; the
numba names fall back to the numpy code when numba is missing.

Kernels work on plain arrays only:

* ``majorize``: degree majorization on a CSR graph.
* ``rgs_scan``: exhaustive scan over set partitions into at most ``p`` blocks,
  encoded as restricted growth strings, minimising internal edges and the edit
  distance to the complete multipartite graph of the partition.
* ``first_coloring``: lexicographically first proper colouring with at most
  ``k`` colours, in restricted-growth form.
"""

import os

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False


def _numba_disabled_by_env():
    return os.environ.get("TURANSTAB_DISABLE_NUMBA", "").strip() not in ("", "0")


USE_NUMBA = NUMBA_AVAILABLE and not _numba_disabled_by_env()


def _jit(func):
    if NUMBA_AVAILABLE:
        return njit(cache=True)(func)
    return func


# -- degree majorization ------------------------------------------------------


def _majorize_loop(n, indptr, indices):
    deg = (indptr[1:] - indptr[:-1]).copy()
    alive = np.ones(n, dtype=np.bool_)
    mark = np.zeros(n, dtype=np.bool_)
    labels = np.full(n, -1, dtype=np.int64)
    members = np.empty(n, dtype=np.int64)
    pivots = np.empty(n, dtype=np.int64)
    degree_sum = np.zeros(n, dtype=np.int64)
    internal = np.zeros(n, dtype=np.int64)
    cross = np.zeros(n, dtype=np.int64)
    remaining = n
    s = 0
    while remaining > 0:
        # strict '>' keeps the smallest label among maximum-degree vertices
        x = -1
        best = -1
        for v in range(n):
            if alive[v] and deg[v] > best:
                best = deg[v]
                x = v
        pivots[s] = x
        for j in range(indptr[x], indptr[x + 1]):
            w = indices[j]
            if alive[w]:
                mark[w] = True
        size = 0
        dsum = 0
        for v in range(n):
            if alive[v] and not mark[v]:
                members[size] = v
                size += 1
                dsum += deg[v]
                labels[v] = s
        for j in range(indptr[x], indptr[x + 1]):
            mark[indices[j]] = False
        for i in range(size):
            alive[members[i]] = False
        twice_internal = 0
        crossing = 0
        for i in range(size):
            v = members[i]
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if labels[w] == s:
                    twice_internal += 1
                elif alive[w]:
                    crossing += 1
                    deg[w] -= 1
        degree_sum[s] = dsum
        internal[s] = twice_internal // 2
        cross[s] = crossing
        remaining -= size
        s += 1
    return pivots[:s], labels, degree_sum[:s], internal[:s], cross[:s]


def majorize_numpy(n, indptr, indices):
    """Recompute residual degrees from scratch at every step."""
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    cols = indices
    alive = np.ones(n, dtype=bool)
    labels = np.full(n, -1, dtype=np.int64)
    pivots, degree_sum, internal, cross = [], [], [], []
    s = 0
    while alive.any():
        live_edge = alive[rows] & alive[cols]
        deg = np.bincount(rows[live_edge], minlength=n)
        x = int(np.argmax(np.where(alive, deg, -1)))
        neighbour = np.zeros(n, dtype=bool)
        neighbour[indices[indptr[x]:indptr[x + 1]]] = True
        part = alive & ~neighbour
        residual = alive & neighbour
        labels[part] = s
        pivots.append(x)
        degree_sum.append(int(deg[part].sum()))
        internal.append(int(np.count_nonzero(part[rows] & part[cols])) // 2)
        cross.append(int(np.count_nonzero(part[rows] & residual[cols])))
        alive = residual
        s += 1
    as_arr = lambda xs: np.asarray(xs, dtype=np.int64)
    return as_arr(pivots), labels, as_arr(degree_sum), as_arr(internal), as_arr(cross)


# -- restricted growth string scan -------------------------------------------


def _rgs_scan_loop(n, p, eu, ev):
    m = eu.shape[0]
    total_pairs = n * (n - 1) // 2
    a = np.zeros(n, dtype=np.int64)
    prefix_max = np.zeros(n, dtype=np.int64)
    sizes = np.zeros(p, dtype=np.int64)
    best_internal = m + 1
    best_internal_code = np.zeros(n, dtype=np.int64)
    best_ed = total_pairs + m + 1
    best_ed_code = np.zeros(n, dtype=np.int64)
    count = 0
    while True:
        count += 1
        internal = 0
        for e in range(m):
            if a[eu[e]] == a[ev[e]]:
                internal += 1
        for b in range(p):
            sizes[b] = 0
        for v in range(n):
            sizes[a[v]] += 1
        same = 0
        for b in range(p):
            same += sizes[b] * (sizes[b] - 1) // 2
        ed = 2 * internal + (total_pairs - same) - m
        if internal < best_internal:
            best_internal = internal
            best_internal_code[:] = a
        if ed < best_ed:
            best_ed = ed
            best_ed_code[:] = a
        # advance to the next string in lexicographic order
        j = n - 1
        while j >= 1:
            if a[j] < p - 1 and a[j] <= prefix_max[j]:
                break
            j -= 1
        if j < 1:
            break
        a[j] += 1
        top = max(prefix_max[j], a[j])
        for k in range(j + 1, n):
            a[k] = 0
            prefix_max[k] = top
    return best_internal, best_internal_code, best_ed, best_ed_code, count


def rgs_matrix(n, p):
    """All restricted growth strings of length ``n`` with values ``< p``, lexicographic."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    columns = [np.zeros(1, dtype=np.int8)]
    top = np.zeros(1, dtype=np.int8)
    for _ in range(1, n):
        choices = np.minimum(top.astype(np.int64) + 2, p)
        parent = np.repeat(np.arange(top.shape[0]), choices)
        starts = np.repeat(np.cumsum(choices) - choices, choices)
        value = (np.arange(parent.shape[0]) - starts).astype(np.int8)
        columns = [col[parent] for col in columns]
        columns.append(value)
        top = np.maximum(top[parent], value)
    return np.stack(columns, axis=1)


def rgs_scan_numpy(n, p, eu, ev):
    codes = rgs_matrix(n, p)
    m = eu.shape[0]
    internal = np.zeros(codes.shape[0], dtype=np.int64)
    for u, v in zip(eu, ev):
        internal += codes[:, u] == codes[:, v]
    same = np.zeros(codes.shape[0], dtype=np.int64)
    for b in range(p):
        size = np.count_nonzero(codes == b, axis=1).astype(np.int64)
        same += size * (size - 1) // 2
    ed = 2 * internal + (n * (n - 1) // 2 - same) - m
    i = int(np.argmin(internal))
    j = int(np.argmin(ed))
    return (
        int(internal[i]),
        codes[i].astype(np.int64),
        int(ed[j]),
        codes[j].astype(np.int64),
        codes.shape[0],
    )


# -- k-colouring search -------------------------------------------------------


def _first_coloring_loop(n, k, indptr, indices):
    a = np.full(n, -1, dtype=np.int64)
    prefix_max = np.full(n + 1, -1, dtype=np.int64)
    j = 0
    while j >= 0:
        a[j] += 1
        limit = min(prefix_max[j] + 1, k - 1)
        if a[j] > limit:
            a[j] = -1
            j -= 1
            continue
        clash = False
        for t in range(indptr[j], indptr[j + 1]):
            w = indices[t]
            if w < j and a[w] == a[j]:
                clash = True
                break
        if clash:
            continue
        if j == n - 1:
            return True, a
        prefix_max[j + 1] = max(prefix_max[j], a[j])
        j += 1
    return False, a


def first_coloring_numpy(n, k, indptr, indices):
    """Breadth-first over proper partial colourings, pruning clashes at each layer."""
    codes = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)
    for j in range(1, n):
        choices = np.minimum(top.astype(np.int64) + 2, k)
        parent = np.repeat(np.arange(top.shape[0]), choices)
        starts = np.repeat(np.cumsum(choices) - choices, choices)
        value = (np.arange(parent.shape[0]) - starts).astype(np.int8)
        ok = np.ones(parent.shape[0], dtype=bool)
        for w in indices[indptr[j]:indptr[j + 1]]:
            if w < j:
                ok &= codes[parent, w] != value
        parent, value = parent[ok], value[ok]
        if parent.shape[0] == 0:
            return False, np.full(n, -1, dtype=np.int64)
        codes = np.column_stack([codes[parent], value])
        top = np.maximum(top[parent], value)
    return True, codes[0].astype(np.int64)


# -- dispatch -----------------------------------------------------------------

majorize_numba = _jit(_majorize_loop)
rgs_scan_numba = _jit(_rgs_scan_loop)
first_coloring_numba = _jit(_first_coloring_loop)


def _pick(numba_impl, numpy_impl):
    return numba_impl if USE_NUMBA else numpy_impl


def majorize(n, indptr, indices):
    return _pick(majorize_numba, majorize_numpy)(n, indptr, indices)


def rgs_scan(n, p, eu, ev):
    """Return ``(min_internal, code, min_ed, code, strings_examined)``; ``p >= 1``."""
    return _pick(rgs_scan_numba, rgs_scan_numpy)(n, p, eu, ev)


def first_coloring(n, k, indptr, indices):
    """Return ``(found, colouring)``; requires ``n >= 1`` and ``k >= 1``."""
    return _pick(first_coloring_numba, first_coloring_numpy)(n, k, indptr, indices)


def backend():
    return "numba" if USE_NUMBA else "numpy"
