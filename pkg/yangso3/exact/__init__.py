from yangso3.exact._biseries import BiSeries, Comparison, biseries_clear_and_compare, series_compare
from yangso3.exact._matrix import (
    OpMatrix,
    as_exact,
    equal,
    first_difference,
    from_rows,
    identity,
    is_zero,
    kron,
    scalar_value,
    unit,
    zeros,
)
from yangso3.exact._poly import (
    RatFunc,
    U,
    V,
    bivariate_terms,
    degree,
    difference_polynomial,
    poly,
    poly_coeffs,
    to_sympy,
)
from yangso3.exact._rational import (
    HALF,
    ONE,
    ZERO,
    Rational,
    RationalLike,
    binomial,
    format_rational,
    parse_rational,
    rational,
)
from yangso3.exact._series import (
    POSITIVE_POWER_WINDOW,
    TruncSeries,
    expand_at_infinity,
    series_first_difference,
    series_invert,
    series_mul,
    series_shift,
    series_tensor,
)

__all__ = [
    "BiSeries",
    "Comparison",
    "HALF",
    "ONE",
    "OpMatrix",
    "POSITIVE_POWER_WINDOW",
    "RatFunc",
    "Rational",
    "RationalLike",
    "TruncSeries",
    "U",
    "V",
    "ZERO",
    "as_exact",
    "binomial",
    "bivariate_terms",
    "biseries_clear_and_compare",
    "degree",
    "difference_polynomial",
    "equal",
    "expand_at_infinity",
    "first_difference",
    "format_rational",
    "from_rows",
    "identity",
    "is_zero",
    "kron",
    "parse_rational",
    "poly",
    "poly_coeffs",
    "rational",
    "scalar_value",
    "series_compare",
    "series_first_difference",
    "series_invert",
    "series_mul",
    "series_shift",
    "series_tensor",
    "to_sympy",
    "unit",
    "zeros",
]
