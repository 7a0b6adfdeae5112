"""Exact-arithmetic engine for the quantized cohomological Hall algebra of the d-loop quiver."""

from .bipartite import (
    DEFAULT_BIT_BUDGET,
    GraphTerm,
    OrientedBipartiteGraph,
    enumerate_graph_terms,
    h_of_graph,
    product_via_graphs,
    verify_graph_model,
)
from .errors import NotSymmetricError, ResourceLimitError
from .kernel import (
    DEFAULT_TERM_CAP,
    KernelSpec,
    StructureConstantTable,
    kernel_polynomial,
    pairwise_kernel,
    structure_constants,
    structure_table,
    verify_coefficient_identity,
    verify_symmetry,
)
from .mpoly import MPoly, embed
from .partition_algebra import (
    bar_element,
    check_associativity,
    element_add,
    product,
    product_elements,
    product_vectors,
    quasi_commutativity_report,
    scale_element,
    shift_sort_product,
    sort_merge,
    specialize,
)
from .partitions import (
    distinct_permutations,
    multiplicity,
    partitions_up_to,
    sort_ascending,
    vec_add,
)
from .qlaurent import ONE, Q, ZERO, QLaurent, Rational, as_rational, q_power, signed_q_power
from .reports import CheckReport, QuasiCommReport
from .shuffle_algebra import (
    DEFAULT_MAX_SUBSETS,
    SymmetricElement,
    augmented_monomial,
    augmented_times_monomial,
    monomial_symmetric,
    monomial_times_monomial,
    partition_image,
    shuffle_product,
    to_monomial_basis,
    to_symmetric_element,
    verify_augmented_rule,
    verify_homomorphism,
    verify_monomial_rule,
    verify_subset_sum_identity,
)

__all__ = [
    "CheckReport",
    "DEFAULT_BIT_BUDGET",
    "DEFAULT_MAX_SUBSETS",
    "DEFAULT_TERM_CAP",
    "GraphTerm",
    "KernelSpec",
    "MPoly",
    "NotSymmetricError",
    "OrientedBipartiteGraph",
    "ONE",
    "Q",
    "QLaurent",
    "QuasiCommReport",
    "Rational",
    "ResourceLimitError",
    "StructureConstantTable",
    "SymmetricElement",
    "ZERO",
    "as_rational",
    "augmented_monomial",
    "augmented_times_monomial",
    "bar_element",
    "check_associativity",
    "distinct_permutations",
    "element_add",
    "embed",
    "enumerate_graph_terms",
    "h_of_graph",
    "kernel_polynomial",
    "monomial_symmetric",
    "monomial_times_monomial",
    "multiplicity",
    "pairwise_kernel",
    "partition_image",
    "partitions_up_to",
    "product",
    "product_elements",
    "product_vectors",
    "product_via_graphs",
    "q_power",
    "quasi_commutativity_report",
    "scale_element",
    "shift_sort_product",
    "shuffle_product",
    "signed_q_power",
    "sort_ascending",
    "sort_merge",
    "specialize",
    "structure_constants",
    "structure_table",
    "to_monomial_basis",
    "to_symmetric_element",
    "vec_add",
    "verify_augmented_rule",
    "verify_coefficient_identity",
    "verify_graph_model",
    "verify_homomorphism",
    "verify_monomial_rule",
    "verify_subset_sum_identity",
    "verify_symmetry",
]
