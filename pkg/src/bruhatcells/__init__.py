"""Conjugacy classes meeting Bruhat cells.

A library for deciding, at desk scale, when a conjugacy class of a
semi-simple group meets a Bruhat cell: Weyl group combinatorics (length,
Bruhat order, conjugacy and twisted conjugacy classes, the classification
of unique-maximal-length involutions), explicit criteria for SL(n+1) in
terms of Jordan data, and a brute-force oracle over small prime fields
that checks everything empirically.
"""

from .coxeter import (
    CartanType,
    ParabolicSubset,
    RootSystem,
    WeylElement,
    bruhat_leq,
    build_root_system,
    coxeter_elements,
    delta0_on_element,
    delta0_on_root,
    delta0_permutation,
    element_to_word_str,
    longest_element,
    reduced_word,
    simple_reflection,
    word_str_to_element,
    word_to_element,
)
from .conjugacy import (
    ConjugacyClass,
    MaximalSet,
    TwistedClass,
    ascent_reachable,
    ascent_step,
    catalog_subsets,
    classifying_subsets,
    conjugacy_class,
    conjugacy_classes,
    enumerate_weyl_group,
    fixed_simple_roots,
    involution_classes,
    max_length_involutions,
    property_one,
    property_two,
    strong_conj_step,
    strongly_conjugate,
    subset_involution,
    subsets_with_property_one,
    twisted_class,
    unique_max_involutions,
    verify_ascent_classes,
    verify_coxeter_bound,
    verify_subset_conjugacy,
    verify_twisted_minimum,
    verify_unique_max_classification,
)
from .errors import GuardError
from .partitions import (
    Partition,
    cycle_type,
    dominance_leq,
    dual,
    hook_bound_matches_dominance,
    partitions_of,
    two_one_shape,
)
from .permutations import (
    Permutation,
    all_permutations,
    exceedances,
    involutions,
    permutation_to_weyl,
    weyl_to_permutation,
)
from .report import CheckResult, Report
from .sl_criteria import (
    JordanClass,
    abstract_jordan_classes,
    block_sum_partition,
    bruhat_lower_set,
    closure_monotonicity,
    dense_cell_involution,
    eigenspace_corank,
    involution_cell_meets,
    is_spherical,
    nested_involution,
    passes_corank_bound,
    spherical_weyl_set,
    two_cycle_cap,
    weyl_class_inside,
)
from .oracle import (
    COMPLETE_PAIRS,
    DEFAULT_PAIRS,
    IntersectionTable,
    MatrixFq,
    PrimeField,
    borel_order,
    bruhat_cell,
    bruhat_factor,
    cell_size_census,
    coset_product_report,
    enumerate_sl,
    field_classes,
    geometric_orbit,
    gl_order,
    intersection_table,
    jordan_matrix,
    longest_monomial,
    opposite_bruhat_cell,
    sl_order,
    validate_class,
)

__version__ = "0.1.0"
