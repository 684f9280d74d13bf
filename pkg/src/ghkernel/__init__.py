"""Gould-Hopper polynomial kernel with exact and Monte Carlo sum-rule checks.

The library evaluates the gap-2 polynomial family g_m(x, p) over two
arithmetic modes (exact Gaussian rationals and complex doubles), verifies
its algebraic sum rules with zero residual in exact mode, and tests the
associated stochastic representations by seeded moment matching.
"""

__version__ = "0.1.0"

from .scalars import (
    EXACT,
    FLOAT,
    ModeMismatchError,
    NotExactlyRepresentableError,
    Scalar,
    exact,
    exact_sqrt,
    flt,
    format_scalar,
    lift,
    magnitude,
    one,
    parse_scalar,
    to_float,
    zero,
)
from .multiindex import (
    MultiIndex,
    compositions,
    mi_factorial,
    mi_length,
    multinomial,
    pochhammer,
)
from .ghpoly import (
    gaussian_moment,
    gh_eval,
    gh_eval_recurrence,
    gh_moment_oracle,
    gh_multi_eval,
    hermite_eval,
)
from .identities import (
    EXACT_PASS,
    FAIL,
    WITHIN_TOLERANCE,
    IdentityReport,
    Matrix,
    PolarizationPair,
    Vector,
    coeff_C,
    complex_givens,
    dot,
    factorization_sumrule,
    graczyk_identity,
    graczyk_lhs,
    graczyk_rhs,
    inner_product_moment_identity,
    mat_identity,
    mat_mul,
    mat_transpose,
    mat_vec,
    matrix_moment_identity,
    matrix_polarization,
    norm_sq,
    orthogonality_check,
    polarization_pair,
    relative_residual,
    rotation_sumrule,
)
from .sampling import (
    MomentVerdict,
    RngStream,
    SampleStats,
    chi_even_moment,
    chi_merge_samples,
    collect_stats,
    inner_product_lhs_samples,
    inner_product_rhs_samples,
    ks_two_sample,
    matrix_trace_rhs_samples,
    matrix_trace_samples,
    moment_match,
    moment_match_exact,
    sample_chi,
    sample_gaussian,
)
from .sweeps import (
    exact_pair_pool,
    default_cs_pairs,
    default_rotations,
    factorization_sweep,
    graczyk_sweep,
    grid_description,
    inner_product_moment_sweep,
    matrix_moment_sweep,
    rotation_sweep,
)

__all__ = [
    "EXACT",
    "EXACT_PASS",
    "FAIL",
    "FLOAT",
    "IdentityReport",
    "Matrix",
    "ModeMismatchError",
    "MomentVerdict",
    "MultiIndex",
    "NotExactlyRepresentableError",
    "PolarizationPair",
    "RngStream",
    "SampleStats",
    "Scalar",
    "Vector",
    "WITHIN_TOLERANCE",
    "chi_even_moment",
    "chi_merge_samples",
    "coeff_C",
    "collect_stats",
    "complex_givens",
    "compositions",
    "default_cs_pairs",
    "default_rotations",
    "dot",
    "exact",
    "exact_pair_pool",
    "exact_sqrt",
    "factorization_sumrule",
    "factorization_sweep",
    "flt",
    "format_scalar",
    "gaussian_moment",
    "gh_eval",
    "gh_eval_recurrence",
    "gh_moment_oracle",
    "gh_multi_eval",
    "graczyk_identity",
    "graczyk_lhs",
    "graczyk_rhs",
    "graczyk_sweep",
    "grid_description",
    "hermite_eval",
    "inner_product_lhs_samples",
    "inner_product_moment_identity",
    "inner_product_moment_sweep",
    "inner_product_rhs_samples",
    "ks_two_sample",
    "lift",
    "magnitude",
    "mat_identity",
    "mat_mul",
    "mat_transpose",
    "mat_vec",
    "matrix_moment_identity",
    "matrix_moment_sweep",
    "matrix_polarization",
    "matrix_trace_rhs_samples",
    "matrix_trace_samples",
    "mi_factorial",
    "mi_length",
    "moment_match",
    "moment_match_exact",
    "multinomial",
    "norm_sq",
    "one",
    "orthogonality_check",
    "parse_scalar",
    "pochhammer",
    "polarization_pair",
    "relative_residual",
    "rotation_sumrule",
    "rotation_sweep",
    "sample_chi",
    "sample_gaussian",
    "to_float",
    "zero",
]
