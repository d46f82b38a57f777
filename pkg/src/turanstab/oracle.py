"""Exhaustive ground truth for small graphs.

Partitions into at most ``p`` blocks are enumerated as restricted growth
strings, one per partition, in lexicographic order; ties go to the first
string reached. The chromatic number is found by an exhaustive breadth- or
depth-first colouring search with increasing ``k``, sharing no code with the
branch and bound in :mod:`turanstab.homomorphism`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import guards, kernels
from .errors import InputError
from .graph import Graph, Partition


@dataclass(frozen=True)
class OracleReport:
    max_p_partite_edges: int
    best_partition: Partition
    exact_ed_to_p_partite: int
    best_ed_partition: Partition
    enumerated: int
    graph_edges: int

    @property
    def min_deletion(self) -> int:
        """Fewest edges whose removal leaves a ``p``-partite graph."""
        return self.graph_edges - self.max_p_partite_edges


def _recount(G: Graph, P: Partition) -> tuple[int, int]:
    labels = P.labels()
    internal = sum(1 for u, v in G.edges if labels[u] == labels[v])
    same = sum(len(part) * (len(part) - 1) // 2 for part in P.parts)
    cross_pairs = G.n * (G.n - 1) // 2 - same
    return G.m - internal, internal + cross_pairs - (G.m - internal)


def oracle_report(G: Graph, p: int) -> OracleReport:
    if p < 1:
        raise InputError(f"p must be a positive integer, got {p}")
    guards.require_oracle_guard(G.n, p)
    eu, ev = G.edge_arrays
    best_internal, code_i, best_ed, code_e, count = kernels.rgs_scan(G.n, p, eu, ev)
    best = Partition.from_labels(code_i, p)
    best_ed_partition = Partition.from_labels(code_e, p)
    kept, _ = _recount(G, best)
    _, ed = _recount(G, best_ed_partition)
    assert kept == G.m - best_internal
    assert ed == best_ed
    return OracleReport(
        max_p_partite_edges=kept,
        best_partition=best,
        exact_ed_to_p_partite=ed,
        best_ed_partition=best_ed_partition,
        enumerated=int(count),
        graph_edges=G.m,
    )


def max_p_partite_subgraph(G: Graph, p: int) -> tuple[int, Partition]:
    report = oracle_report(G, p)
    return report.max_p_partite_edges, report.best_partition


def exact_ed_to_p_partite(G: Graph, p: int) -> tuple[int, Partition]:
    report = oracle_report(G, p)
    return report.exact_ed_to_p_partite, report.best_ed_partition


def chromatic_oracle(G: Graph) -> int:
    """Smallest ``k`` admitting a proper ``k``-colouring, by exhaustive search."""
    guards.require_oracle_guard(G.n, 1)
    if G.n == 0:
        return 0
    indptr, indices = G.csr
    for k in range(1, G.n + 1):
        found, coloring = kernels.first_coloring(G.n, k, indptr, indices)
        if found:
            assert all(coloring[u] != coloring[v] for u, v in G.edges)
            return k
    raise AssertionError("every graph is n-colourable")
