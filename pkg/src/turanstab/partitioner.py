"""Degree majorization: split a graph into parts with few internal edges.

At step ``i`` the pivot ``x_i`` is a maximum-degree vertex of the graph induced
on the residual set ``R_{i-1}`` (smallest label on ties). The pivot's
non-neighbours inside ``R_{i-1}`` form part ``V_i`` and its neighbours become
``R_i``. Every vertex of ``V_i`` has residual degree at most ``|R_i|``, so

    2 e(G|V_i) + e(V_i, R_i) = sum of residual degrees over V_i <= |V_i| |R_i|.

Summing over the steps bounds ``e(G) + sum_i e(G|V_i)`` by the edge count of
the complete multipartite graph on the parts. For a ``K_{p+1}``-free graph
there are at most ``p`` steps (the pivots form a clique), which gives
``sum_i e(G|V_i) <= e(T_{n,p}) - e(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import guards, kernels
from .errors import InputError, PreconditionViolation
from .graph import (
    Graph,
    Partition,
    _check_partition_of,
    multipartite_edge_count,
    turan_edge_count,
)
from .homomorphism import contains_clique


@dataclass(frozen=True)
class MajorizationStep:
    pivot: int
    part: frozenset[int]
    residual: frozenset[int]
    degree_sum: int
    internal_edges: int
    cross_edges: int

    @property
    def product_bound(self) -> int:
        return len(self.part) * len(self.residual)


@dataclass(frozen=True)
class MajorizationTrace:
    n: int
    steps: tuple[MajorizationStep, ...]
    partition: Partition

    @property
    def s(self) -> int:
        return len(self.steps)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(step.pivot for step in self.steps)

    @property
    def internal_total(self) -> int:
        return sum(step.internal_edges for step in self.steps)

    @property
    def degree_sum_total(self) -> int:
        return sum(step.degree_sum for step in self.steps)

    def check_invariants(self, G: Graph) -> None:
        """Assert every structural invariant of the trace against ``G``."""
        residual = frozenset(G.vertices())
        covered: set[int] = set()
        for step in self.steps:
            x = step.pivot
            assert x in step.part
            assert step.part == residual - G.adjacency[x]
            assert step.residual == residual & G.adjacency[x]
            assert max((len(G.adjacency[v] & residual) for v in residual), default=0) == len(
                G.adjacency[x] & residual
            )
            assert not covered & step.part
            covered |= step.part
            assert step.residual == frozenset(G.vertices()) - covered
            twice_internal = sum(len(G.adjacency[v] & step.part) for v in step.part)
            cross = sum(len(G.adjacency[v] & step.residual) for v in step.part)
            assert twice_internal == 2 * step.internal_edges
            assert cross == step.cross_edges
            assert step.degree_sum == sum(len(G.adjacency[v] & residual) for v in step.part)
            assert 2 * step.internal_edges + step.cross_edges == step.degree_sum
            assert step.degree_sum <= step.product_bound
            residual = step.residual
        assert not residual
        assert covered == set(G.vertices())
        for u in self.pivots:
            for v in self.pivots:
                assert u == v or G.has_edge(u, v)


def degree_majorization(G: Graph) -> MajorizationTrace:
    indptr, indices = G.csr
    pivots, labels, degree_sum, internal, cross = kernels.majorize(G.n, indptr, indices)
    s = len(pivots)
    parts = [[] for _ in range(s)]
    for v, lab in enumerate(labels.tolist()):
        parts[lab].append(v)
    residual = set(G.vertices())
    steps = []
    for i in range(s):
        part = frozenset(parts[i])
        residual -= part
        steps.append(
            MajorizationStep(
                pivot=int(pivots[i]),
                part=part,
                residual=frozenset(residual),
                degree_sum=int(degree_sum[i]),
                internal_edges=int(internal[i]),
                cross_edges=int(cross[i]),
            )
        )
    return MajorizationTrace(G.n, tuple(steps), Partition(parts, G.n))


def p_partite_subgraph(G: Graph, P: Partition) -> Graph:
    """``G`` with every edge inside a part of ``P`` removed."""
    _check_partition_of(G, P)
    labels = P.labels()
    return Graph(G.n, [(u, v) for u, v in G.edges if labels[u] != labels[v]])


@dataclass(frozen=True)
class Theorem1Certificate:
    n: int
    p: int
    t: int
    s: int
    e_G: int
    internal_total: int
    h0_edges: int

    @property
    def bound_ok(self) -> bool:
        return self.internal_total <= self.t


def _clique_violation(p, witness):
    return PreconditionViolation(
        f"graph contains K_{p + 1} on vertices {sorted(witness)}", witness=witness
    )


def theorem1_certificate(G: Graph, p: int, check_clique: bool | None = None):
    """Certify a ``p``-partite subgraph ``H_0`` with ``e(H_0) >= e(G) - t``.

    Returns ``(certificate, trace, partition, H_0)`` where ``partition`` is the
    trace partition padded with empty parts to exactly ``p`` parts.

    ``check_clique`` controls the exact ``K_{p+1}`` search: ``None`` runs it
    when ``n`` is within the clique guard, ``False`` trusts the caller.
    A detected ``K_{p+1}`` raises :class:`PreconditionViolation`.
    """
    if p < 1:
        raise InputError(f"p must be a positive integer, got {p}")
    trace = degree_majorization(G)
    if trace.s > p:
        raise _clique_violation(p, trace.pivots[: p + 1])
    if check_clique is None:
        check_clique = G.n <= guards.clique_check_max_n()
    if check_clique:
        witness = contains_clique(G, p + 1)
        if witness is not None:
            raise _clique_violation(p, witness)
    partition = trace.partition.padded(p)
    h0 = p_partite_subgraph(G, partition)
    internal_total = trace.internal_total
    assert h0.m == G.m - internal_total
    # chain: e(G) + internal = sum of degree sums <= e(K(V_1..V_s)) <= e(T_{n,s})
    assert G.m + internal_total == trace.degree_sum_total
    assert trace.degree_sum_total <= sum(step.product_bound for step in trace.steps)
    assert sum(step.product_bound for step in trace.steps) == multipartite_edge_count(
        trace.partition.sizes()
    )
    cert = Theorem1Certificate(
        n=G.n,
        p=p,
        t=turan_edge_count(G.n, p) - G.m,
        s=trace.s,
        e_G=G.m,
        internal_total=internal_total,
        h0_edges=h0.m,
    )
    return cert, trace, partition, h0


# -- line-oriented trace text --------------------------------------------------

TRACE_HEADER = "# step pivot part residual_size internal cross degree_sum"


def format_trace(trace: MajorizationTrace) -> str:
    lines = [f"# majorization-trace n={trace.n} s={trace.s}", TRACE_HEADER]
    for i, step in enumerate(trace.steps, start=1):
        members = ",".join(str(v) for v in sorted(step.part))
        lines.append(
            f"{i} {step.pivot} {members} {len(step.residual)} "
            f"{step.internal_edges} {step.cross_edges} {step.degree_sum}"
        )
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> MajorizationTrace:
    """Inverse of :func:`format_trace`."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# majorization-trace"):
        raise InputError("missing trace header", line=1)
    fields = dict(item.split("=") for item in lines[0].split()[2:])
    n = int(fields["n"])
    steps = []
    residual = set(range(n))
    parts = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#") or not line.strip():
            continue
        cols = line.split()
        if len(cols) != 7:
            raise InputError("trace line must have 7 fields", line=lineno)
        part = frozenset(int(v) for v in cols[2].split(",") if v)
        residual -= part
        if len(residual) != int(cols[3]):
            raise InputError("residual size does not match the parts so far", line=lineno)
        parts.append(sorted(part))
        steps.append(
            MajorizationStep(
                pivot=int(cols[1]),
                part=part,
                residual=frozenset(residual),
                internal_edges=int(cols[4]),
                cross_edges=int(cols[5]),
                degree_sum=int(cols[6]),
            )
        )
    if len(steps) != int(fields["s"]):
        raise InputError("step count does not match header")
    return MajorizationTrace(n, tuple(steps), Partition(parts, n))
