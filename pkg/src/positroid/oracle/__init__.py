"""Independent brute-force computations used to cross-check the tree."""

from .chains import (
    chain_quasisym_schur,
    count_maximal_chains,
    is_k_bruhat_cover,
    is_k_bruhat_leq,
    maximal_chains,
)
from .cylindric import cylindric_schur, cylindric_weights
from .linalg import integer_rank
from .schur_module import schur_module_character, weight_space_dim
from .stanley import (
    WeightTable,
    affine_stanley_monomial_coeff,
    affine_stanley_truncated,
    count_reduced_words,
    cyclically_decreasing_from_subset,
    weight_table,
)

__all__ = [
    "chain_quasisym_schur", "count_maximal_chains", "is_k_bruhat_cover",
    "is_k_bruhat_leq", "maximal_chains", "cylindric_schur", "cylindric_weights",
    "integer_rank", "schur_module_character", "weight_space_dim", "WeightTable",
    "affine_stanley_monomial_coeff", "affine_stanley_truncated",
    "count_reduced_words", "cyclically_decreasing_from_subset", "weight_table",
]
