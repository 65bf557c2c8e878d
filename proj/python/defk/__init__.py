"""Exact analysis of combinatorial configurations.

Thin package around the compiled core: validation, catalog, parallelism
analysis, exact determinants, nonexistence sieves, and isomorph-free
enumeration at desk scale.
"""

from defk._core import (
    Configuration,
    Error,
    are_isomorphic,
    build_cyclic,
    canonical_fingerprint,
    catalog_get,
    catalog_names,
    catalog_notes,
    check_parity_theorem,
    closed_form_det,
    cycle_block_det,
    cycle_decomposition,
    cycle_pattern_det,
    derived_params,
    dual,
    enumerate_configurations,
    eq2_det,
    from_json,
    from_text,
    gram_determinant,
    grand_sum_inverse_quadform,
    has_tops,
    incidence_determinant,
    incidence_matrix,
    is_k_net,
    is_parallel,
    is_perfect_square,
    is_sum_of_two_squares,
    parallel_classes,
    satisfies_playfair,
    scan,
    sieve_bruck_ryser,
    sieve_k2,
    sieve_tops,
    structural_det,
    to_json_text,
    to_text,
)

__all__ = [
    "Configuration",
    "Error",
    "are_isomorphic",
    "build_cyclic",
    "canonical_fingerprint",
    "catalog_get",
    "catalog_names",
    "catalog_notes",
    "check_parity_theorem",
    "closed_form_det",
    "cycle_block_det",
    "cycle_decomposition",
    "cycle_pattern_det",
    "derived_params",
    "dual",
    "enumerate_configurations",
    "eq2_det",
    "from_json",
    "from_text",
    "gram_determinant",
    "grand_sum_inverse_quadform",
    "has_tops",
    "incidence_determinant",
    "incidence_matrix",
    "is_k_net",
    "is_parallel",
    "is_perfect_square",
    "is_sum_of_two_squares",
    "parallel_classes",
    "satisfies_playfair",
    "scan",
    "sieve_bruck_ryser",
    "sieve_k2",
    "sieve_tops",
    "structural_det",
    "to_json_text",
    "to_text",
]
