"""Graded posets, flag f/h-vectors, ab/cd-indexes, and R-labeling search.

Thin Python veneer over the C++ core. Posets are immutable; elements are
addressed by index into the canonical (rank, id) order, with string ids
available through ``GradedPoset.ids()``.
"""

from ._core import (
    FlagVector,
    GradedPoset,
    Interval,
    Labeling,
    PosetError,
    SearchOutcome,
    TripleAssignment,
    ab_index,
    ab_index_from_assignment,
    ab_index_from_flag_h,
    are_isomorphic,
    assignment_from_json,
    assignment_to_json,
    assignment_to_labeling,
    boolean_lattice,
    breakpoints,
    butterfly,
    cd_index,
    cd_words_of_degree,
    chain_ids,
    chain_poset,
    check_triple_assignment,
    descent_distribution,
    expand_cd,
    flag_f_from_h,
    flag_f_vector,
    flag_h_vector,
    flag_vector_to_json,
    for_each_rank2_consistent,
    glue,
    glued,
    interval,
    is_eulerian,
    is_r_labeling,
    is_rising,
    is_triple_assignment,
    labeling_from_json,
    labeling_to_assignment,
    labeling_to_json,
    load_assignment_file,
    load_poset_file,
    locally_valid,
    make_assignment,
    make_labeling,
    maximal_chains,
    maximal_chains_between,
    poset_from_json,
    poset_to_json,
    rank2_candidate_count,
    rising_chain_status,
    search,
    sum_entries,
    to_cd_index,
    triplets,
    verify_claims,
)

__all__ = [
    "FlagVector",
    "GradedPoset",
    "Interval",
    "Labeling",
    "PosetError",
    "SearchOutcome",
    "TripleAssignment",
    "ab_index",
    "ab_index_from_assignment",
    "ab_index_from_flag_h",
    "are_isomorphic",
    "assignment_from_json",
    "assignment_to_json",
    "assignment_to_labeling",
    "boolean_lattice",
    "breakpoints",
    "butterfly",
    "cd_index",
    "cd_words_of_degree",
    "chain_ids",
    "chain_poset",
    "check_triple_assignment",
    "descent_distribution",
    "expand_cd",
    "flag_f_from_h",
    "flag_f_vector",
    "flag_h_vector",
    "flag_vector_to_json",
    "for_each_rank2_consistent",
    "glue",
    "glued",
    "interval",
    "is_eulerian",
    "is_r_labeling",
    "is_rising",
    "is_triple_assignment",
    "labeling_from_json",
    "labeling_to_assignment",
    "labeling_to_json",
    "load_assignment_file",
    "load_poset_file",
    "locally_valid",
    "make_assignment",
    "make_labeling",
    "maximal_chains",
    "maximal_chains_between",
    "poset_from_json",
    "poset_to_json",
    "rank2_candidate_count",
    "rising_chain_status",
    "search",
    "sum_entries",
    "to_cd_index",
    "triplets",
    "verify_claims",
]

__version__ = "0.1.0"
