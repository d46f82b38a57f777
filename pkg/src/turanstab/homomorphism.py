"""Exact clique, homomorphism and chromatic-number searches for small graphs.

All searches are deterministic backtracking over Python-int bitsets. Every
witness is re-checked edge by edge before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import guards
from .graph import Graph, complete_graph


def _bits(vertices):
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def _iter_bits(b):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def _greedy_color_bound(candidates, adj):
    """Number of colour classes in a greedy colouring of ``candidates``."""
    colors = 0
    uncolored = candidates
    while uncolored:
        colors += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
    return colors


def _is_clique(G: Graph, vertices) -> bool:
    return all(G.has_edge(u, v) for u, v in combinations(vertices, 2))


def contains_clique(G: Graph, k: int) -> frozenset[int] | None:
    """Return a ``k``-clique of ``G`` (lexicographically first) or ``None``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > G.n:
        return None
    adj = G.adjacency_bits
    # vertices of degree < k-1 cannot be in a k-clique
    core = _bits(v for v in G.vertices() if len(G.adjacency[v]) >= k - 1)

    def extend(clique, candidates):
        if len(clique) == k:
            return clique
        need = k - len(clique)
        if candidates.bit_count() < need:
            return None
        if _greedy_color_bound(candidates, adj) < need:
            return None
        for v in _iter_bits(candidates):
            later = candidates & ~((2 << v) - 1)
            found = extend(clique + [v], later & adj[v])
            if found is not None:
                return found
            candidates &= ~(1 << v)
            if candidates.bit_count() < need:
                return None
        return None

    witness = extend([], core)
    if witness is None:
        return None
    assert _is_clique(G, witness), "clique search returned a non-clique"
    return frozenset(witness)


def clique_number(G: Graph) -> int:
    k = 0
    while contains_clique(G, k + 1) is not None:
        k += 1
    return k


@dataclass
class PatternGraph:
    """A homomorphism source graph with a lazily computed chromatic number."""

    graph: Graph
    chromatic_number_cache: int | None = field(default=None)

    def __post_init__(self):
        guards.require_hom_guard(self.graph.n)

    @property
    def chromatic_number(self) -> int:
        if self.chromatic_number_cache is None:
            self.chromatic_number_cache = chromatic_number(self.graph)
        return self.chromatic_number_cache


def _as_pattern(F) -> PatternGraph:
    return F if isinstance(F, PatternGraph) else PatternGraph(F)


def _is_homomorphism(F: Graph, H: Graph, phi: dict[int, int]) -> bool:
    return len(phi) == F.n and all(H.has_edge(phi[u], phi[v]) for u, v in F.edges)


def hom_exists(F, H: Graph) -> dict[int, int] | None:
    """Find an edge-preserving map ``V(F) -> V(H)`` or return ``None``.

    ``F`` may be a ``Graph`` or a ``PatternGraph``. Pattern vertices are
    assigned in descending-degree order and targets are tried in ascending
    label order; domains of unassigned pattern neighbours are narrowed after
    each assignment (forward checking).
    """
    F = _as_pattern(F).graph
    guards.require_hom_guard(F.n)
    if F.n == 0:
        return {}
    if H.n == 0:
        return None
    hadj = H.adjacency_bits
    order = sorted(F.vertices(), key=lambda v: (-len(F.adjacency[v]), v))
    everything = (1 << H.n) - 1
    # isolated pattern vertices can go anywhere; others need a vertex with a neighbour
    with_neighbour = _bits(v for v in H.vertices() if H.adjacency[v])
    domains = {v: (with_neighbour if F.adjacency[v] else everything) for v in F.vertices()}
    phi: dict[int, int] = {}

    def assign(depth, domains):
        if depth == len(order):
            return True
        v = order[depth]
        pending = [u for u in F.adjacency[v] if u not in phi]
        for c in _iter_bits(domains[v]):
            narrowed = dict(domains)
            dead = False
            for u in pending:
                narrowed[u] = domains[u] & hadj[c]
                if not narrowed[u]:
                    dead = True
                    break
            if dead:
                continue
            phi[v] = c
            if assign(depth + 1, narrowed):
                return True
            del phi[v]
        return False

    if not assign(0, domains):
        return None
    assert _is_homomorphism(F, H, phi), "homomorphism search returned an invalid map"
    return dict(sorted(phi.items()))


def is_hom_free(H: Graph, F) -> bool:
    return hom_exists(F, H) is None


def _greedy_clique(G: Graph) -> list[int]:
    order = sorted(G.vertices(), key=lambda v: (-len(G.adjacency[v]), v))
    clique: list[int] = []
    for v in order:
        if all(G.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def _dsatur_order_coloring(G: Graph) -> dict[int, int]:
    colors: dict[int, int] = {}
    saturation = {v: set() for v in G.vertices()}
    while len(colors) < G.n:
        v = max(
            (u for u in G.vertices() if u not in colors),
            key=lambda u: (len(saturation[u]), len(G.adjacency[u]), -u),
        )
        c = 0
        while c in saturation[v]:
            c += 1
        colors[v] = c
        for w in G.adjacency[v]:
            saturation[w].add(c)
    return colors


def chromatic_number(F: Graph) -> int:
    """Exact chromatic number by DSatur branch and bound.

    The greedy clique gives the lower bound and a DSatur colouring the initial
    upper bound; the search only looks for colourings beating the incumbent.
    """
    guards.require_hom_guard(F.n)
    if F.n == 0:
        return 0
    if F.m == 0:
        return 1
    lower = len(_greedy_clique(F))
    best = max(_dsatur_order_coloring(F).values()) + 1
    if best == lower:
        return best
    adj = F.adjacency
    colors = [-1] * F.n
    # neighbour colour multiset per vertex, for saturation degree
    seen = [dict() for _ in range(F.n)]

    def pick():
        best_v, best_key = -1, None
        for v in range(F.n):
            if colors[v] < 0:
                key = (len(seen[v]), len(adj[v]), -v)
                if best_key is None or key > best_key:
                    best_v, best_key = v, key
        return best_v

    def search(colored, used):
        nonlocal best
        if colored == F.n:
            best = used
            return best == lower
        v = pick()
        for c in range(min(used + 1, best - 1)):
            if c in seen[v]:
                continue
            colors[v] = c
            for w in adj[v]:
                seen[w][c] = seen[w].get(c, 0) + 1
            done = search(colored + 1, max(used, c + 1))
            for w in adj[v]:
                seen[w][c] -= 1
                if not seen[w][c]:
                    del seen[w][c]
            colors[v] = -1
            if done:
                return True
        return False

    search(0, 0)
    return best


def hom_to_complete(F, s: int) -> dict[int, int] | None:
    """``hom_exists(F, K_s)``; ``K_0`` is the empty graph."""
    return hom_exists(F, complete_graph(s))
