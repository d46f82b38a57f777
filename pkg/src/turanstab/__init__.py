"""Degree-majorization certificates for K_{p+1}-free graphs."""

from .errors import CapabilityError, InputError, PreconditionViolation
from .generators import GenSpec, clique_broken_gnp, perturbed_turan, sub_multipartite
from .graph import (
    Graph,
    Partition,
    complete_multipartite,
    degree,
    induced_subgraph,
    restricted_degree,
    symmetric_difference_size,
    turan_edge_count,
    turan_graph,
)
from .homomorphism import PatternGraph, chromatic_number, contains_clique, hom_exists, is_hom_free
from .oracle import chromatic_oracle, exact_ed_to_p_partite, max_p_partite_subgraph, oracle_report
from .partitioner import degree_majorization, p_partite_subgraph, theorem1_certificate
from .stability import co2_check, completion, corollary1_certificate, rebalance_to_turan

__version__ = "0.1.0"
