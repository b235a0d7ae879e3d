from yangso3.rep._build import (
    NormScalar,
    NotScalarError,
    build_rep,
    eval_rep_raw,
    invert_T,
    matrix_product,
    normalize_scalar,
    normalized_eval_rep,
    tensor_rep,
    transpose_T,
    unitarity_products,
)
from yangso3.rep._checks import (
    check_constant_term,
    check_gen_rel_t,
    check_gen_rel_tprime,
    check_inverse_is_transpose,
    check_normalization,
    check_rtt,
    check_unitarity,
    generating_relations,
    inverse_generating_relations,
    inverse_matrix_relations,
    rtt_relations,
)
from yangso3.rep._rept import LABELS, EvalParams, RepT, RepTInv, series_name

__all__ = [
    "EvalParams",
    "LABELS",
    "NormScalar",
    "NotScalarError",
    "RepT",
    "RepTInv",
    "build_rep",
    "check_constant_term",
    "check_gen_rel_t",
    "check_gen_rel_tprime",
    "check_inverse_is_transpose",
    "check_normalization",
    "check_rtt",
    "check_unitarity",
    "eval_rep_raw",
    "generating_relations",
    "inverse_generating_relations",
    "inverse_matrix_relations",
    "invert_T",
    "matrix_product",
    "normalize_scalar",
    "normalized_eval_rep",
    "rtt_relations",
    "series_name",
    "tensor_rep",
    "transpose_T",
    "unitarity_products",
]
