"""Automorphism groups of nonseparable graphs.

Pipeline: two-level edge-cut weights partition the vertices into
candidate orbits; isometric cycles and their ring sums supply
generating cycles whose dihedral symmetries extend to automorphisms;
a brute-force oracle independently enumerates the full group so every
spectral result can be checked against ground truth.
"""
from ._kernels import IMPLEMENTATION
from .catalog import catalog, catalog_names
from .cutspectrum import (WeightTable, base_cut, edge_weight_triples, edge_weights,
                          fingerprint_equal, second_level, second_level_by_parity)
from .cycles import (Cycle, IsometricCycleSet, as_cycle, cycle_incidence_weights,
                     enumerate_isometric_cycles, is_isometric, ring_sum, ring_sum_all,
                     why_not_cycle)
from .gencycles import (CoverConfiguration, GeneratingCycle, SpectralResult,
                        automorphisms_from_generating_cycles, candidate_generating_cycles,
                        dihedral_partial_maps, enumerate_cycle_covers, extend_partial_map)
from .graph import (BudgetExceededError, EdgeSet, Graph, GraphError, SrgParams,
                    export_graph, is_nonseparable, parse_graph, parse_graph_json,
                    srg_parameters, star)
from .oracle import OracleResult, count_spanning_cycles, enumerate_automorphisms, true_orbits
from .orbits import (VertexClass, VertexPartition, edge_image_preserved, group_orbits,
                     orbit_subset_count, pairwise_transposition_automorphisms,
                     verify_permutation, weight_classes)
from .perms import (CayleyTable, Permutation, PermutationGroup, cayley_table,
                    coset_element_order, cycle_notation, find_klein_four, group_closure,
                    parity, parse_permutation)

__version__ = "0.1.0"

__all__ = [
    "IMPLEMENTATION", "__version__",
    "BudgetExceededError", "CayleyTable", "CoverConfiguration", "Cycle", "EdgeSet",
    "GeneratingCycle", "Graph", "GraphError", "IsometricCycleSet", "OracleResult",
    "Permutation", "PermutationGroup", "SpectralResult", "SrgParams", "VertexClass",
    "VertexPartition", "WeightTable",
    "as_cycle", "automorphisms_from_generating_cycles", "base_cut",
    "candidate_generating_cycles", "catalog", "catalog_names", "cayley_table",
    "coset_element_order", "count_spanning_cycles", "cycle_incidence_weights",
    "cycle_notation", "dihedral_partial_maps", "edge_image_preserved",
    "edge_weight_triples", "edge_weights", "enumerate_automorphisms",
    "enumerate_cycle_covers", "enumerate_isometric_cycles", "export_graph",
    "extend_partial_map", "find_klein_four", "fingerprint_equal", "group_closure",
    "group_orbits", "is_isometric", "is_nonseparable", "orbit_subset_count", "parity",
    "parse_graph", "parse_graph_json", "parse_permutation",
    "pairwise_transposition_automorphisms", "ring_sum", "ring_sum_all", "second_level",
    "second_level_by_parity", "srg_parameters", "star", "true_orbits",
    "verify_permutation", "weight_classes", "why_not_cycle",
]
