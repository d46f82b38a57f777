"""Seeded generators of ``K_{p+1}``-free graphs.

Randomness comes from SplitMix64 (Steele, Lea, Flood 2014), chosen because it
is a fully specified 64-bit generator that is easy to port, so a corpus can be
regenerated bit-for-bit in another language:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)              (all arithmetic mod 2**64)

Bounded integers use rejection sampling: draw ``r`` until
``r >= (2**64 - bound) % bound`` and return ``r % bound``. A Bernoulli trial with
rational probability ``a/b`` succeeds when ``below(b) < a``.

Pairs are always visited in lexicographic order ``(u, v)``, ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import guards
from .errors import CapabilityError, InputError
from .graph import Graph, turan_edge_count, turan_graph
from .homomorphism import contains_clique

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def bernoulli(self, prob: Fraction) -> bool:
        return self.below(prob.denominator) < prob.numerator


def _as_probability(prob) -> Fraction:
    prob = Fraction(prob)
    if not 0 <= prob <= 1:
        raise InputError(f"probability must lie in [0, 1], got {prob}")
    return prob


def perturbed_turan(n: int, p: int, k: int, seed: int) -> Graph:
    """``T_{n,p}`` minus ``k`` distinct edges chosen uniformly (partial Fisher-Yates)."""
    T, _ = turan_graph(n, p)
    edges = T.sorted_edges()
    if not 0 <= k <= len(edges):
        raise InputError(f"k must lie in [0, {len(edges)}] for T_({n},{p}), got {k}")
    rng = SplitMix64(seed)
    for i in range(k):
        j = i + rng.below(len(edges) - i)
        edges[i], edges[j] = edges[j], edges[i]
    return Graph(n, edges[k:])


def sub_multipartite(sizes, keep_probability, seed: int) -> Graph:
    """Keep each cross pair of ``K(sizes)`` independently with the given probability.

    Part ``i`` holds consecutive labels starting after parts ``0..i-1``.
    """
    sizes = [int(a) for a in sizes]
    if any(a < 0 for a in sizes):
        raise InputError(f"part sizes must be nonnegative: {sizes}")
    prob = _as_probability(keep_probability)
    labels = [i for i, a in enumerate(sizes) for _ in range(a)]
    rng = SplitMix64(seed)
    edges = [
        (u, v)
        for u, v in combinations(range(len(labels)), 2)
        if labels[u] != labels[v] and rng.bernoulli(prob)
    ]
    return Graph(len(labels), edges)


def clique_broken_gnp(n: int, p: int, edge_probability, seed: int) -> Graph:
    """Sample ``G(n, prob)``, then delete edges until no ``K_{p+1}`` remains.

    Each round deletes the lexicographically smallest pair of the first clique
    witness found.
    """
    if p < 1:
        raise InputError(f"p must be a positive integer, got {p}")
    if n > guards.clique_check_max_n():
        raise CapabilityError(f"clique breaking limited to n <= {guards.clique_check_max_n()}")
    prob = _as_probability(edge_probability)
    rng = SplitMix64(seed)
    edges = {pair for pair in combinations(range(n), 2) if rng.bernoulli(prob)}
    G = Graph(n, edges)
    while (witness := contains_clique(G, p + 1)) is not None:
        u, v = sorted(witness)[:2]
        edges.discard((u, v))
        G = Graph(n, edges)
    return G


# -- GenSpec config lines ------------------------------------------------------

KINDS = ("perturbed_turan", "sub_multipartite", "clique_broken_gnp")


@dataclass(frozen=True)
class GenSpec:
    """``kind:n:p:param:seed``.

    ``param`` is ``k`` for perturbed_turan, ``a/b`` for clique_broken_gnp, and
    ``s1,s2,...@a/b`` (part sizes, keep probability) for sub_multipartite.
    """

    kind: str
    n: int
    p: int
    param: str
    seed: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}")
        if self.n < 0 or self.p < 1:
            raise InputError(f"need n >= 0 and p >= 1, got n={self.n}, p={self.p}")
        if not 0 <= self.seed <= MASK64:
            raise InputError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.kind == "perturbed_turan":
            k = self.k
            if not 0 <= k <= turan_edge_count(self.n, self.p):
                raise InputError(f"k = {k} out of range for T_({self.n},{self.p})")
        elif self.kind == "sub_multipartite":
            sizes, _ = self.sizes_and_probability
            if sum(sizes) != self.n or len(sizes) != self.p:
                raise InputError(f"sizes {sizes} do not match n={self.n}, p={self.p}")
        else:
            self.probability

    @property
    def k(self) -> int:
        try:
            return int(self.param)
        except ValueError:
            raise InputError(f"perturbed_turan needs an integer k, got {self.param!r}") from None

    @property
    def probability(self) -> Fraction:
        try:
            return _as_probability(Fraction(self.param))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad probability {self.param!r}") from None

    @property
    def sizes_and_probability(self) -> tuple[list[int], Fraction]:
        try:
            sizes_text, prob_text = self.param.split("@")
            sizes = [int(a) for a in sizes_text.split(",")]
            prob = _as_probability(Fraction(prob_text))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"sub_multipartite param must be 's1,s2,...@a/b', got {self.param!r}") from None
        return sizes, prob

    @classmethod
    def parse(cls, line: str) -> GenSpec:
        fields = line.strip().split(":")
        if len(fields) != 5:
            raise InputError(f"GenSpec must be kind:n:p:param:seed, got {line!r}")
        kind, n, p, param, seed = fields
        try:
            return cls(kind, int(n), int(p), param, int(seed))
        except ValueError:
            raise InputError(f"n, p and seed must be integers in {line!r}") from None

    def format(self) -> str:
        return f"{self.kind}:{self.n}:{self.p}:{self.param}:{self.seed}"

    def build(self) -> Graph:
        if self.kind == "perturbed_turan":
            return perturbed_turan(self.n, self.p, self.k, self.seed)
        if self.kind == "sub_multipartite":
            sizes, prob = self.sizes_and_probability
            return sub_multipartite(sizes, prob, self.seed)
        return clique_broken_gnp(self.n, self.p, self.probability, self.seed)
