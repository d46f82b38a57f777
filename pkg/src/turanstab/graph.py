"""Simple undirected graphs on vertices ``0..n-1`` and complete multipartite graphs.

Graphs are immutable. Adjacency is kept as per-vertex frozensets for O(1)
membership tests; CSR arrays and integer bitsets are derived lazily for the
numeric kernels and the clique search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import InputError


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with labelled vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        edge_set = set()
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n = {n}")
            e = _pair(u, v)
            edge_set.add(e)
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._n = n
        self._edges = frozenset(edge_set)
        self._adj = tuple(frozenset(a) for a in adjacency)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return self._adj[x]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def _check_vertex(self, x: int) -> None:
        if not (0 <= x < self._n):
            raise InputError(f"vertex {x} out of range for n = {self._n}")

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` with each neighbour list sorted ascending."""
        degrees = np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=self._n)
        indptr = np.zeros(self._n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter(
            (v for a in self._adj for v in sorted(a)), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(us, vs)`` of the sorted edge list."""
        edges = self.sorted_edges()
        if not edges:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        arr = np.asarray(edges, dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        bits = []
        for a in self._adj:
            b = 0
            for v in a:
                b |= 1 << v
            bits.append(b)
        return tuple(bits)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint vertex sets covering ``0..n-1``; parts may be empty."""

    parts: tuple[frozenset[int], ...]
    n: int

    def __init__(self, parts: Iterable[Iterable[int]], n: int):
        frozen = tuple(frozenset(int(v) for v in part) for part in parts)
        seen: set[int] = set()
        for part in frozen:
            for v in part:
                if not (0 <= v < n):
                    raise InputError(f"vertex {v} out of range for n = {n}")
                if v in seen:
                    raise InputError(f"vertex {v} appears in more than one part")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InputError(f"partition does not cover vertices {missing[:10]}")
        object.__setattr__(self, "parts", frozen)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_labels(cls, labels: Iterable[int], k: int | None = None) -> Partition:
        labels = [int(x) for x in labels]
        if k is None:
            k = max(labels, default=-1) + 1
        parts = [[] for _ in range(k)]
        for v, lab in enumerate(labels):
            if not (0 <= lab < k):
                raise InputError(f"label {lab} out of range for {k} parts")
            parts[lab].append(v)
        return cls(parts, len(labels))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def sizes(self) -> list[int]:
        return [len(part) for part in self.parts]

    def labels(self) -> np.ndarray:
        out = np.empty(self.n, dtype=np.int64)
        for i, part in enumerate(self.parts):
            for v in part:
                out[v] = i
        return out

    def padded(self, k: int) -> Partition:
        if len(self.parts) > k:
            raise InputError(f"partition has {len(self.parts)} parts, cannot pad to {k}")
        return Partition(self.parts + (frozenset(),) * (k - len(self.parts)), self.n)

    def as_sorted_lists(self) -> list[list[int]]:
        return [sorted(part) for part in self.parts]


def _check_subset(G: Graph, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(int(v) for v in A)
    for v in A:
        G._check_vertex(v)
    return A


def _check_partition_of(G: Graph, P: Partition) -> None:
    if not isinstance(P, Partition):
        raise InputError("expected a Partition")
    if P.n != G.n:
        raise InputError(f"partition is over {P.n} vertices, graph has {G.n}")


def degree(G: Graph, x: int) -> int:
    return len(G.neighbors(x))


def restricted_degree(G: Graph, x: int, A: Iterable[int]) -> int:
    """``|N(x) & A|``."""
    A = _check_subset(G, A)
    return len(G.neighbors(x) & A)


def induced_subgraph(G: Graph, A: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``A``, relabelled to ``0..|A|-1`` in ascending order.

    Returns the graph and the old-to-new label map.
    """
    A = _check_subset(G, A)
    relabel = {v: i for i, v in enumerate(sorted(A))}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in A and v in A]
    return Graph(len(relabel), edges), relabel


def internal_edge_count(G: Graph, A: Iterable[int]) -> int:
    """``e(G|A)`` without materialising the induced subgraph."""
    A = _check_subset(G, A)
    return sum(len(G.adjacency[v] & A) for v in A) // 2


def complete_multipartite(parts: Partition) -> Graph:
    labels = parts.labels()
    edges = [(u, v) for u, v in combinations(range(parts.n), 2) if labels[u] != labels[v]]
    return Graph(parts.n, edges)


def multipartite_edge_count(sizes: Iterable[int]) -> int:
    sizes = list(sizes)
    n = sum(sizes)
    return n * (n - 1) // 2 - sum(a * (a - 1) // 2 for a in sizes)


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Balanced sizes, larger parts first: ``r`` copies of ``ceil(n/p)``, then ``floor(n/p)``."""
    if p < 1:
        raise InputError(f"p must be a positive integer, got {p}")
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan_graph(n: int, p: int) -> tuple[Graph, Partition]:
    """``T_{n,p}`` with vertex ``v`` placed in part ``v mod p``."""
    turan_part_sizes(n, p)
    partition = Partition.from_labels([v % p for v in range(n)], p)
    return complete_multipartite(partition), partition


def turan_edge_count(n: int, p: int) -> int:
    # r parts of size q+1, p-r of size q; exact integers only
    turan_part_sizes(n, p)
    q, r = divmod(n, p)
    return (n * n - r * (q + 1) ** 2 - (p - r) * q * q) // 2


def symmetric_difference_size(G1: Graph, G2: Graph) -> int:
    if G1.n != G2.n:
        raise InputError(f"graphs have different vertex counts ({G1.n} vs {G2.n})")
    return len(G1.edges ^ G2.edges)


def edit_distance(G1: Graph, G2: Graph) -> int:
    return symmetric_difference_size(G1, G2)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)) if n >= 3 else ())


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` with ``u < v``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InputError("empty input", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise InputError("header must be 'n m'", line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputError("header must hold two integers", line=1) from None
    if n < 0 or m < 0:
        raise InputError("n and m must be nonnegative", line=1)
    if len(lines) - 1 != m:
        # point at the first missing or first surplus line
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}", line=min(len(lines), m + 1) + 1)
    edges = set()
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise InputError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError("edge endpoints must be integers", line=lineno) from None
        if u == v:
            raise InputError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < v < n):
            raise InputError(f"edge must satisfy 0 <= u < v < n, got {u} {v}", line=lineno)
        if (u, v) in edges:
            raise InputError(f"duplicate edge {u} {v}", line=lineno)
        edges.add((u, v))
    return Graph(n, edges)


def format_edge_list(G: Graph) -> str:
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(G))
