"""Cubic maximal-nontraceable graphs: construction and certification.

Builds cubic maximal-nontraceable graphs by opening three
maximal-hypohamiltonian blocks and joining them through a hub, certifies
every claimed property with witness records that replay without a solver,
and re-derives the small-order minimums by exhaustive search.
"""

from mntkit._core import (
    BlockSpec,
    Certificate,
    Graph,
    Inflation,
    achievable_orders,
    bound_check,
    certify_cubic_mnt,
    condition_C,
    coxeter,
    deg2_structure_check,
    edge_bound,
    exhaustive_min_search,
    extended_condition,
    flower_snark,
    from_graph6,
    graph_hash,
    is_hamiltonian,
    is_hypohamiltonian,
    is_mhh,
    is_mnh,
    is_mnt,
    is_traceable,
    k4_inflate,
    lemma_hypo_paths_check,
    lemma_subgraph_check,
    lemma_subgraph_sweep,
    load_block_file,
    make_block,
    oracle_solve,
    petersen,
    read_jsonl,
    replay,
    snark22,
    solve,
    to_dot,
    to_graph6,
    validate_witness,
)

__version__ = "1.0.0"

__all__ = [
    "BlockSpec",
    "Certificate",
    "Graph",
    "Inflation",
    "achievable_orders",
    "bound_check",
    "certify_cubic_mnt",
    "condition_C",
    "coxeter",
    "deg2_structure_check",
    "edge_bound",
    "exhaustive_min_search",
    "extended_condition",
    "flower_snark",
    "from_graph6",
    "graph_hash",
    "is_hamiltonian",
    "is_hypohamiltonian",
    "is_mhh",
    "is_mnh",
    "is_mnt",
    "is_traceable",
    "k4_inflate",
    "lemma_hypo_paths_check",
    "lemma_subgraph_check",
    "lemma_subgraph_sweep",
    "load_block_file",
    "make_block",
    "oracle_solve",
    "petersen",
    "read_jsonl",
    "replay",
    "snark22",
    "solve",
    "to_dot",
    "to_graph6",
    "validate_witness",
]
