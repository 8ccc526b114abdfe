"""Degree conditions for Hamiltonicity of digraphs.

Digraphs are immutable bitmask-adjacency structures of order at most 64.
The package checks classical and recent sufficient degree conditions,
solves the underlying cycle and path problems exactly up to order 24,
builds the tightness witnesses, and bulk-verifies each condition against
enumeration and seeded sampling.
"""

from .conditions import (ConditionReport, DegreeProfile, REGISTRY, Witness,
                         check, cond_bipartite, cond_ghouila_houri,
                         cond_ham_connected, cond_main, cond_meyniel,
                         cond_nash_williams, cond_one_light, cond_woodall)
from .connectivity import ConnectivityReport, is_k_strong, is_strong, vertex_connectivity
from .constructions import (NamedConstruction, build_complete, build_d8, build_d9,
                            build_d9_prime, h_reduction, random_digraph,
                            random_satisfying_main)
from .digraph import (Cycle, DgfError, Digraph, MAX_ORDER, Path, add_arc,
                      add_arc_set, bits, converse, degrees, from_arcs, induced,
                      infer_bipartition, mask_of, new_digraph, parse, serialize,
                      validate_cycle, validate_path)
from .harness import (Counterexample, SearchOutcome, enumerate_and_check,
                      format_report, outcome_to_json, recheck_counterexample,
                      sample_and_check, search_problem1, search_problem2,
                      verify_lemma_drivers, verify_tightness)
from .solver import (CapacityError, SOLVER_CAP, SolveResult, hamiltonian_cycle,
                     hamiltonian_path, has_cycle_of_length, insert_vertex,
                     longest_cycle, longest_cycle_through)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER", "SOLVER_CAP", "REGISTRY", "__version__",
    "Digraph", "Path", "Cycle", "DgfError", "CapacityError",
    "Witness", "ConditionReport", "DegreeProfile", "ConnectivityReport",
    "SolveResult", "NamedConstruction", "Counterexample", "SearchOutcome",
    "new_digraph", "add_arc", "add_arc_set", "from_arcs", "bits", "mask_of",
    "degrees", "induced", "converse", "infer_bipartition", "parse", "serialize",
    "validate_path", "validate_cycle",
    "is_strong", "is_k_strong", "vertex_connectivity",
    "check", "cond_nash_williams", "cond_ghouila_houri", "cond_woodall",
    "cond_meyniel", "cond_one_light", "cond_main", "cond_ham_connected",
    "cond_bipartite",
    "hamiltonian_cycle", "hamiltonian_path", "longest_cycle",
    "longest_cycle_through", "has_cycle_of_length", "insert_vertex",
    "build_d8", "build_d9", "build_d9_prime", "build_complete",
    "h_reduction", "random_digraph", "random_satisfying_main",
    "verify_tightness", "enumerate_and_check", "sample_and_check",
    "verify_lemma_drivers", "search_problem1", "search_problem2",
    "recheck_counterexample", "format_report", "outcome_to_json",
]
