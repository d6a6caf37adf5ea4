"""Permutations, planar binary trees, and the operadic calculus behind the
Tonks and Loday-Ronco maps.

Values cross the boundary as canonical strings: permutations and words as
digit strings ("2413") or comma-separated integers, trees as "((*,*),*)",
terms as "((2^3 o_1 2^1) o_2 2^2)".
"""

from operadlab._core import (
    catalan,
    check_local_indices,
    classify_cover,
    compose,
    decreasing_encoding,
    eq_mod_i,
    eval_term,
    f_normalization,
    g_map,
    graft_at,
    graft_root,
    h_root_decomposition,
    head_insertion,
    insertion_index,
    internal_nodes,
    inverse,
    inversions,
    is_l_factor,
    lattice_dot,
    loday_ronco,
    normalize_l_factor,
    permutations,
    phihat,
    quotient_poset,
    reverse_word,
    rotations,
    split_below_above,
    standardize,
    tamari_leq,
    term_arity,
    tonks_classes,
    tonks_independent,
    tonks_map,
    trees,
    u_count,
    varphi,
    verify_classes,
    verify_completeness,
    verify_identities,
    verify_local_indices,
    verify_order_preservation,
    verify_quotient,
    verify_soundness_fuzz,
    weak_covers_left,
    weak_covers_right,
    weak_leq,
    VerificationReport,
)

__all__ = [
    "catalan",
    "check_local_indices",
    "classify_cover",
    "compose",
    "decreasing_encoding",
    "eq_mod_i",
    "eval_term",
    "f_normalization",
    "g_map",
    "graft_at",
    "graft_root",
    "h_root_decomposition",
    "head_insertion",
    "insertion_index",
    "internal_nodes",
    "inverse",
    "inversions",
    "is_l_factor",
    "lattice_dot",
    "loday_ronco",
    "normalize_l_factor",
    "permutations",
    "phihat",
    "quotient_poset",
    "reverse_word",
    "rotations",
    "split_below_above",
    "standardize",
    "tamari_leq",
    "term_arity",
    "tonks_classes",
    "tonks_independent",
    "tonks_map",
    "trees",
    "u_count",
    "varphi",
    "verify_classes",
    "verify_completeness",
    "verify_identities",
    "verify_local_indices",
    "verify_order_preservation",
    "verify_quotient",
    "verify_soundness_fuzz",
    "weak_covers_left",
    "weak_covers_right",
    "weak_leq",
    "VerificationReport",
]
