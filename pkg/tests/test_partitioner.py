import pytest
from hypothesis import given
from hypothesis import strategies as st

from turanstab.errors import InputError, PreconditionViolation
from turanstab.generators import perturbed_turan
from turanstab.graph import Graph, Partition, complete_graph, turan_edge_count, turan_graph
from turanstab.homomorphism import contains_clique
from turanstab.oracle import max_p_partite_subgraph
from turanstab.partitioner import (
    degree_majorization,
    format_trace,
    p_partite_subgraph,
    parse_trace,
    theorem1_certificate,
)

from .conftest import GOLDEN
from .helpers import graphs, multipartite_subgraphs


def test_c5_trace(c5):
    trace = degree_majorization(c5)
    assert trace.pivots == (0, 1)
    assert trace.steps[0].part == {0, 2, 3}
    assert trace.steps[0].residual == {1, 4}
    assert trace.steps[1].part == {1, 4}
    assert trace.s == 2
    assert trace.internal_total == 1
    trace.check_invariants(c5)


@pytest.mark.parametrize("n,p", [(5, 2), (9, 3), (12, 4), (7, 3), (3, 5)])
def test_turan_graph_trace_recovers_parts(n, p):
    T, parts = turan_graph(n, p)
    trace = degree_majorization(T)
    assert trace.s == min(n, p)
    assert set(trace.partition.parts) == {part for part in parts.parts if part}
    assert trace.internal_total == 0


def test_edgeless_trace():
    trace = degree_majorization(Graph(4))
    assert trace.s == 1
    assert trace.steps[0].part == {0, 1, 2, 3}
    assert trace.internal_total == 0


@pytest.mark.parametrize("name", ["c5", "petersen"])
def test_golden_traces(name, request):
    G = request.getfixturevalue(name)
    text = format_trace(degree_majorization(G))
    assert text == (GOLDEN / f"{name}_trace.txt").read_text()
    assert parse_trace(text) == degree_majorization(G)


@given(graphs(max_n=10))
def test_trace_invariants_hold_on_any_graph(G):
    trace = degree_majorization(G)
    trace.check_invariants(G)
    assert degree_majorization(G) == trace
    # e(G) + internal = sum of degree sums <= e(K(V_1..V_s)) <= e(T_{n,s})
    products = sum(step.product_bound for step in trace.steps)
    assert G.m + trace.internal_total == trace.degree_sum_total <= products
    assert products <= turan_edge_count(G.n, max(trace.s, 1))


def test_p_partite_subgraph_examples(c5):
    H = p_partite_subgraph(c5, Partition([{0, 2, 3}, {1, 4}], 5))
    assert H.m == 4 and (2, 3) not in H.edges
    assert p_partite_subgraph(c5, Partition([{v} for v in range(5)], 5)) == c5
    T, parts = turan_graph(7, 3)
    assert p_partite_subgraph(T, parts) == T
    with pytest.raises(InputError):
        p_partite_subgraph(c5, Partition([{0, 1}], 2))


def test_certificate_examples(c5):
    G = perturbed_turan(8, 2, 3, seed=4)
    cert, *_ = theorem1_certificate(G, 2)
    assert cert.t == 3 and cert.internal_total <= 3 and cert.bound_ok

    cert, trace, partition, h0 = theorem1_certificate(c5, 2)
    assert (cert.t, cert.internal_total, cert.h0_edges, cert.bound_ok) == (1, 1, 4, True)
    assert len(partition) == 2

    with pytest.raises(PreconditionViolation) as info:
        theorem1_certificate(complete_graph(4), 2)
    assert len(info.value.witness) == 3
    assert info.value.witness == (0, 1, 2)


def test_certificate_pads_to_p_parts():
    cert, trace, partition, _ = theorem1_certificate(Graph(4), 3)
    assert trace.s == 1
    assert partition.sizes() == [4, 0, 0]


def test_certificate_uses_exact_clique_check_when_pivots_miss_it():
    # a triangle hanging off a high-degree vertex; majorization sees two steps only
    G = Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6), (6, 7), (5, 7)])
    assert degree_majorization(G).s <= 2
    with pytest.raises(PreconditionViolation) as info:
        theorem1_certificate(G, 2)
    assert info.value.witness == (5, 6, 7)
    cert, *_ = theorem1_certificate(G, 2, check_clique=False)
    assert cert.s <= 2


@pytest.mark.parametrize("p", [2, 3, 4])
@given(data=st.data())
def test_theorem_bound_on_free_graphs(p, data):
    G = data.draw(multipartite_subgraphs(p, max_n=11))
    assert contains_clique(G, p + 1) is None
    cert, trace, partition, h0 = theorem1_certificate(G, p)
    assert trace.s <= p
    assert cert.internal_total <= cert.t
    assert h0.m == G.m - cert.internal_total
    for part in partition.parts:
        assert not any(u in part and v in part for u, v in h0.edges)


@given(multipartite_subgraphs(3, max_n=9))
def test_algorithm_never_beats_oracle(G):
    cert, *_ = theorem1_certificate(G, 3)
    best, _ = max_p_partite_subgraph(G, 3)
    assert cert.internal_total >= G.m - best
    assert G.m - best <= cert.t


def test_parse_trace_rejects_bad_residual():
    text = "# majorization-trace n=3 s=1\n1 0 0,1 0 0 0 0\n"
    with pytest.raises(InputError):
        parse_trace(text)
