"""(k-2)-linear connected components of hypergraphs."""

from .archipelago import (Archipelago, EdgeClass, EdgePartition, Island, add_crossing,
                          add_new_crossing, add_other, classify, init_archipelago, lca, lcc,
                          partition_archipelago, witness_path)
from .hypercore import (Hypergraph, HypergraphError, HypergraphFormatError, parse_hypergraph,
                        serialize_hypergraph, uniformize)
from .oracle import oracle_extendable_exists, oracle_lcc, enumerate_paths
from .pafp import (BicoloredGraph, line_graph, pafp_exact, restrict_hypergraph, screen_forbidden,
                   solve_pafp_via_hypergraph)
from .pathcalc import (ContractError, compose, extract_subpath, is_extendable, is_path_from_to,
                       is_q_linear, widen_endpoint)

__all__ = [
    "Archipelago", "BicoloredGraph", "ContractError", "EdgeClass", "EdgePartition", "Hypergraph",
    "HypergraphError", "HypergraphFormatError", "Island", "add_crossing", "add_new_crossing",
    "add_other", "classify", "compose", "enumerate_paths", "extract_subpath", "init_archipelago",
    "is_extendable", "is_path_from_to", "is_q_linear", "lca", "lcc", "line_graph",
    "oracle_extendable_exists", "oracle_lcc", "pafp_exact", "parse_hypergraph",
    "partition_archipelago", "restrict_hypergraph", "screen_forbidden", "serialize_hypergraph",
    "solve_pafp_via_hypergraph", "uniformize", "widen_endpoint", "witness_path",
]
