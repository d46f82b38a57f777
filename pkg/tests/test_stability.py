from itertools import combinations, permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from turanstab.generators import perturbed_turan
from turanstab.graph import (
    Graph,
    Partition,
    complete_multipartite,
    multipartite_edge_count,
    symmetric_difference_size,
    turan_edge_count,
    turan_graph,
    turan_part_sizes,
)
from turanstab.stability import (
    canonical_partition,
    co2_check,
    completion,
    corollary1_certificate,
    exact_imbalance_bound,
    imbalance,
    multipartite_distance,
    rebalance_to_turan,
    size_targets,
)

from .helpers import multipartite_subgraphs


def _min_distance_to_turan_shape(P):
    """Brute force: smallest |E(K(P)) ^ E(K(Q))| over every Q with Turán part sizes."""
    n, p = P.n, len(P)
    targets = sorted(turan_part_sizes(n, p))
    best = None
    K = complete_multipartite(P)
    for labels in product(range(p), repeat=n):
        if sorted(labels.count(b) for b in range(p)) != targets:
            continue
        d = symmetric_difference_size(K, complete_multipartite(Partition.from_labels(labels, p)))
        best = d if best is None else min(best, d)
    return best


def test_completion_examples(c5):
    K, ed = completion(c5, Partition([{0, 2, 3}, {1, 4}], 5))
    assert K.m == 6 and ed == 3
    T, parts = turan_graph(8, 3)
    assert completion(T, parts)[1] == 0
    assert completion(Graph(4), Partition([{0, 1}, {2, 3}], 4))[1] == 4


def test_corollary_examples(c5):
    G = perturbed_turan(20, 4, 5, seed=3)
    cert, _ = corollary1_certificate(G, 4)
    assert cert.t == 5 and cert.ed_G_K <= 15 and cert.bound_3t_ok

    cert, _ = corollary1_certificate(c5, 2)
    assert (cert.t, cert.ed_G_K, cert.bound_3t_ok) == (1, 3, True)

    T, _ = turan_graph(9, 3)
    cert, reb = corollary1_certificate(T, 3)
    assert (cert.t, cert.ed_G_K, cert.internal_total, cert.ed_K_Tshape, cert.imbalance) == (0, 0, 0, 0, 0)
    assert cert.all_applicable_hold()
    assert reb.moves == ()


def test_rebalance_examples():
    reb = rebalance_to_turan(canonical_partition([3, 2]))
    assert reb.moves == () and reb.ed_K_Tshape == 0

    P = canonical_partition([4, 0])
    reb = rebalance_to_turan(P)
    assert len(reb.moves) == 2
    assert reb.moves == ((3, 0, 1), (2, 0, 1))
    oracle = symmetric_difference_size(complete_multipartite(P), complete_multipartite(reb.balanced))
    assert oracle == 4 == reb.ed_K_Tshape

    assert rebalance_to_turan(canonical_partition([2, 2, 2])).moves == ()


def test_co2_examples():
    assert co2_check(6, 3, 0, [2, 2, 2]) == (True, True)
    assert imbalance(5, [3, 2]) == 2
    assert co2_check(5, 2, 1, [3, 2]) == (True, True)
    # e(K(4,0)) = 0 >= 4 - 2t forces t >= 2; at t = 2 both bounds are tight
    assert imbalance(4, [4, 0]) == 32 == 4 * 2 * 2 * 2
    assert rebalance_to_turan(canonical_partition([4, 0])).ed_K_Tshape ** 2 * 2 == 4 * 4 * 2
    assert co2_check(4, 2, 2, [4, 0]) == (True, True)
    assert co2_check(4, 2, 1, [4, 0]) == (None, None)


def test_imbalance_form_fails_for_turan_sizes_when_p_does_not_divide_n():
    # the t = 0 Turán shape itself has imbalance p r (p - r) > 0 = 4 t p^2
    assert imbalance(5, [3, 2]) == 2
    assert co2_check(5, 2, 0, [3, 2]) == (False, True)
    assert exact_imbalance_bound(5, 2, 0) == 2


def test_balancing_form_has_small_counterexample():
    # sizes (3, 1), t = 1: hypothesis e(K) = 3 >= 4 - 2 holds, yet every K(2,2) is 3 edits away
    P = canonical_partition([3, 1])
    assert multipartite_edge_count([3, 1]) >= turan_edge_count(4, 2) - 2
    assert _min_distance_to_turan_shape(P) == 3
    assert rebalance_to_turan(P).ed_K_Tshape == 3
    assert 3 * 3 * 2 > 4 * 4 * 1
    assert co2_check(4, 2, 1, [3, 1]) == (True, False)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_exact_imbalance_bound_is_valid_and_attained(p):
    for n in range(0, 13):
        T = turan_edge_count(n, p)
        for cuts in combinations(range(n + p - 1), p - 1):
            # stars and bars over all compositions of n into p parts
            bounds = (-1,) + cuts + (n + p - 1,)
            sizes = [bounds[i + 1] - bounds[i] - 1 for i in range(p)]
            deficit = T - multipartite_edge_count(sizes)
            t = (deficit + 1) // 2
            assert imbalance(n, sizes) <= exact_imbalance_bound(n, p, t)
        assert imbalance(n, turan_part_sizes(n, p)) == exact_imbalance_bound(n, p, 0)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=9), st.lists(st.integers(0, 3), min_size=1, max_size=9))
def test_multipartite_distance_matches_explicit(a, b):
    n = min(len(a), len(b))
    P, Q = Partition.from_labels(a[:n], 4), Partition.from_labels(b[:n], 4)
    explicit = symmetric_difference_size(complete_multipartite(P), complete_multipartite(Q))
    assert multipartite_distance(P, Q) == explicit


@given(st.lists(st.integers(0, 9), min_size=1, max_size=4))
def test_rebalance_moves_the_minimum(sizes):
    p, n = len(sizes), sum(sizes)
    reb = rebalance_to_turan(canonical_partition(sizes))
    assert sorted(reb.balanced.sizes()) == sorted(turan_part_sizes(n, p))
    targets = size_targets(sizes)
    assert len(reb.moves) == sum(max(0, a - b) for a, b in zip(sizes, targets))
    balanced = turan_part_sizes(n, p)
    best = min(sum(max(0, a - balanced[j]) for a, j in zip(sizes, perm)) for perm in permutations(range(p)))
    assert len(reb.moves) == best
    for v, i, j in reb.moves:
        assert v in canonical_partition(sizes).parts[i] and v in reb.balanced.parts[j]


@pytest.mark.parametrize("sizes", [[3, 1], [4, 0], [3, 3, 0], [2, 2, 1, 0]])
def test_rebalance_distance_is_optimal_on_small_shapes(sizes):
    P = canonical_partition(sizes)
    assert rebalance_to_turan(P).ed_K_Tshape == _min_distance_to_turan_shape(P)


def test_fewest_moves_is_not_always_fewest_edits():
    # (5,1,1) -> (3,2,2): two single moves cost 9; regrouping {3,4} and merging {5,6} costs 7
    P = canonical_partition([5, 1, 1])
    reb = rebalance_to_turan(P)
    assert len(reb.moves) == 2
    assert reb.ed_K_Tshape == 9
    assert _min_distance_to_turan_shape(P) == 7


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_corollary_chain(p, data):
    G = data.draw(multipartite_subgraphs(p, max_n=10))
    cert, reb = corollary1_certificate(G, p)
    t = turan_edge_count(G.n, p) - G.m
    assert cert.t == t
    added = cert.e_K - cert.h0_edges
    assert added >= 0
    assert added <= 2 * t
    assert cert.ed_G_K == cert.internal_total + added <= 3 * t
    assert cert.e_K >= cert.h0_edges
    # triangle step: G -> K -> Turán-shaped graph
    T_shape = complete_multipartite(reb.balanced)
    assert symmetric_difference_size(G, T_shape) <= cert.ed_G_K + cert.ed_K_Tshape
    if cert.co2_applicable:
        assert cert.imbalance <= exact_imbalance_bound(G.n, p, cert.t)
