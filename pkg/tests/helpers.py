"""Hypothesis strategies and shared state for the test suite."""

from itertools import combinations

from hypothesis import strategies as st

from turanstab.graph import Graph

ACCEPTANCE_LOG: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def multipartite_subgraphs(draw, p, min_n=0, max_n=9):
    """Random subgraphs of random complete p-partite graphs (hence K_{p+1}-free)."""
    n = draw(st.integers(min_n, max_n))
    labels = draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if labels[u] != labels[v]]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])
