"""Completion to a complete multipartite graph and the balancing bounds.

All inequalities that involve ``n/p`` or a square root are evaluated with
cleared denominators, so every verdict is an exact integer comparison:

* imbalance:  ``sum_i (p |V_i| - n)^2 <= 4 t p^2``
* balancing:  ``ed(K, T)^2 p <= n^2 t``

Both only apply when ``e(K) >= e(T_{n,p}) - 2t``; otherwise the verdict is
``None`` (not applicable).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InputError
from .graph import (
    Graph,
    Partition,
    _check_partition_of,
    complete_multipartite,
    multipartite_edge_count,
    symmetric_difference_size,
    turan_edge_count,
    turan_part_sizes,
)
from .partitioner import theorem1_certificate


def completion(G: Graph, P: Partition) -> tuple[Graph, int]:
    """Return ``K = K(P)`` and ``|E(G) ^ E(K)|``.

    The distance is counted as internal edges of ``G`` plus cross pairs of
    ``P`` missing from ``G`` and checked against the explicit symmetric
    difference.
    """
    _check_partition_of(G, P)
    K = complete_multipartite(P)
    labels = P.labels()
    internal = sum(1 for u, v in G.edges if labels[u] == labels[v])
    missing_cross = K.m - (G.m - internal)
    ed = internal + missing_cross
    assert ed == symmetric_difference_size(G, K)
    return K, ed


def _same_part_pairs(sizes) -> int:
    return sum(a * (a - 1) // 2 for a in sizes)


def multipartite_distance(P: Partition, Q: Partition) -> int:
    """``|E(K(P)) ^ E(K(Q))|`` from the contingency table of the two partitions.

    A pair differs exactly when it is inside a part in one partition and
    split by the other.
    """
    if P.n != Q.n:
        raise InputError("partitions are over different vertex sets")
    lp, lq = P.labels(), Q.labels()
    both = Counter(zip(lp.tolist(), lq.tolist()))
    same_p = _same_part_pairs(P.sizes())
    same_q = _same_part_pairs(Q.sizes())
    same_both = _same_part_pairs(both.values())
    return same_p + same_q - 2 * same_both


def size_targets(sizes) -> list[int]:
    """Turán size assigned to each part: sort by size (descending, stable) and pair by rank."""
    p = len(sizes)
    n = sum(sizes)
    balanced = turan_part_sizes(n, p)
    order = sorted(range(p), key=lambda i: (-sizes[i], i))
    targets = [0] * p
    for rank, i in enumerate(order):
        targets[i] = balanced[rank]
    return targets


@dataclass(frozen=True)
class Rebalance:
    moves: tuple[tuple[int, int, int], ...]
    balanced: Partition
    ed_K_Tshape: int


def rebalance_to_turan(P: Partition) -> Rebalance:
    """Move the fewest vertices so that the part sizes become Turán sizes.

    Each part's target comes from :func:`size_targets`. Oversized parts give
    away their highest labels (largest first); deficient parts are filled in
    part order. Moves are ``(vertex, from_part, to_part)``.
    """
    p = len(P)
    if p < 1:
        raise InputError("partition must have at least one part")
    sizes = P.sizes()
    targets = size_targets(sizes)
    parts = [set(part) for part in P.parts]
    donors = []
    for i in range(p):
        surplus = sizes[i] - targets[i]
        if surplus > 0:
            donors.extend((v, i) for v in sorted(parts[i], reverse=True)[:surplus])
    moves = []
    cursor = 0
    for j in range(p):
        for _ in range(targets[j] - sizes[j]):
            v, i = donors[cursor]
            cursor += 1
            parts[i].remove(v)
            parts[j].add(v)
            moves.append((v, i, j))
    assert cursor == len(donors)
    balanced = Partition(parts, P.n)
    return Rebalance(tuple(moves), balanced, multipartite_distance(P, balanced))


def canonical_partition(sizes) -> Partition:
    """Consecutive labels: the first ``sizes[0]`` vertices form part 0, and so on."""
    parts, start = [], 0
    for a in sizes:
        parts.append(range(start, start + a))
        start += a
    return Partition(parts, start)


def imbalance(n: int, sizes) -> int:
    p = len(sizes)
    return sum((p * a - n) ** 2 for a in sizes)


def exact_imbalance_bound(n: int, p: int, t: int) -> int:
    """Largest imbalance any ``p`` sizes summing to ``n`` can have when ``e(K) >= e(T) - 2t``.

    ``e(K) = (n^2 - sum a_i^2) / 2`` and ``sum (p a_i - n)^2 = p^2 sum a_i^2 - p n^2``
    give ``imbalance = (p^2 - p) n^2 - 2 p^2 e(K)``, so ``e(K) >= e(T) - 2t`` caps it at
    ``4 t p^2 + p r (p - r)`` with ``r = n mod p``. The last term is the imbalance
    of the Turán sizes themselves and is dropped by the ``4 t p^2`` form.
    """
    r = n % p
    return 4 * t * p * p + p * r * (p - r)


def co2_applicable(n: int, p: int, t: int, sizes) -> bool:
    return multipartite_edge_count(sizes) >= turan_edge_count(n, p) - 2 * t


def co2_check(n: int, p: int, t: int, part_sizes, ed_K_Tshape: int | None = None):
    """Return ``(imbalance_ok, co2_ok)``, both ``None`` when the hypothesis fails.

    ``ed_K_Tshape`` defaults to the rebalancing distance of a partition with
    the given sizes.
    """
    sizes = list(part_sizes)
    if len(sizes) != p or sum(sizes) != n or min(sizes, default=0) < 0:
        raise InputError(f"part sizes {sizes} are not {p} parts summing to {n}")
    if not co2_applicable(n, p, t, sizes):
        return None, None
    if ed_K_Tshape is None:
        ed_K_Tshape = rebalance_to_turan(canonical_partition(sizes)).ed_K_Tshape
    imbalance_ok = imbalance(n, sizes) <= 4 * t * p * p
    co2_ok = ed_K_Tshape * ed_K_Tshape * p <= n * n * t
    return imbalance_ok, co2_ok


@dataclass(frozen=True)
class StabilityCertificate:
    n: int
    p: int
    t: int
    s: int
    internal_total: int
    h0_edges: int
    ed_G_K: int
    part_sizes: tuple[int, ...]
    imbalance: int
    ed_K_Tshape: int
    imbalance_ok: bool | None
    co2_ok: bool | None
    e_K: int
    seed: int | None = None

    @property
    def bound_ok(self) -> bool:
        return self.internal_total <= self.t

    @property
    def bound_3t_ok(self) -> bool:
        return self.ed_G_K <= 3 * self.t

    @property
    def co2_applicable(self) -> bool:
        return self.imbalance_ok is not None

    def verdicts(self) -> dict[str, bool | None]:
        return {
            "theorem1": self.bound_ok,
            "corollary1": self.bound_3t_ok,
            "imbalance": self.imbalance_ok,
            "co2": self.co2_ok,
        }

    def all_applicable_hold(self) -> bool:
        return all(v is not False for v in self.verdicts().values())


def corollary1_certificate(G: Graph, p: int, seed: int | None = None, check_clique=None):
    """Run the partition certificate, complete it, and rebalance to Turán sizes.

    Returns ``(certificate, rebalance)``; the balanced partition and its moves
    live on the rebalance record.
    """
    cert1, trace, partition, h0 = theorem1_certificate(G, p, check_clique=check_clique)
    sizes = tuple(partition.sizes())
    # K(P) contains H_0 edgewise: delete the internal edges, add e(K) - e(H_0) pairs
    e_K = multipartite_edge_count(sizes)
    assert e_K >= h0.m
    ed_G_K = cert1.internal_total + (e_K - h0.m)
    reb = rebalance_to_turan(partition)
    imbalance_ok, co2_ok = co2_check(G.n, p, cert1.t, sizes, reb.ed_K_Tshape)
    cert = StabilityCertificate(
        n=G.n,
        p=p,
        t=cert1.t,
        s=cert1.s,
        internal_total=cert1.internal_total,
        h0_edges=cert1.h0_edges,
        ed_G_K=ed_G_K,
        part_sizes=sizes,
        imbalance=imbalance(G.n, sizes),
        ed_K_Tshape=reb.ed_K_Tshape,
        imbalance_ok=imbalance_ok,
        co2_ok=co2_ok,
        e_K=e_K,
        seed=seed,
    )
    return cert, reb
