from yangso3.gauss._checks import (
    check_e_f_commutator,
    check_h_anticommutators,
    check_k0_factorization,
    check_kminus1_relations,
    check_leading_terms,
    check_lemmas,
    check_reconstruction,
    check_relations,
    check_shift_relations,
    check_square_relations,
    check_uniqueness,
    check_unitarity_consequences,
    gauss_env,
    gauss_evaluator,
)
from yangso3.gauss._data import (
    SERIES_NAMES,
    GaussData,
    factor_matrices,
    gauss_decompose,
    reconstruct_from_generators,
    reconstruct_T,
)
from yangso3.gauss._relations import (
    E_FIRST_MODE,
    commutation_relations,
    lemma_relations,
    shift_relations,
    unitarity_relations,
)

__all__ = [
    "E_FIRST_MODE",
    "GaussData",
    "SERIES_NAMES",
    "check_e_f_commutator",
    "check_h_anticommutators",
    "check_k0_factorization",
    "check_kminus1_relations",
    "check_leading_terms",
    "check_lemmas",
    "check_reconstruction",
    "check_relations",
    "check_shift_relations",
    "check_square_relations",
    "check_uniqueness",
    "check_unitarity_consequences",
    "commutation_relations",
    "factor_matrices",
    "gauss_decompose",
    "gauss_env",
    "gauss_evaluator",
    "lemma_relations",
    "reconstruct_T",
    "reconstruct_from_generators",
    "shift_relations",
    "unitarity_relations",
]
