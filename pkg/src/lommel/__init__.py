"""Numerics for Lommel-type even power series and their modified variants.

The package evaluates the two-parameter series lambda_{mu,nu} and the
one-parameter family Lambda_mu together with the associated modified and
oscillatory second-kind functions, locates positive zeros, computes
reciprocal-square power sums by two independent routes, and certifies a
collection of monotonicity / log-convexity / Turan-type / sandwich
inequalities on grids with explicit margins.
"""
from __future__ import annotations

from .core import (
    HalfIntFamily,
    Params,
    SeriesValue,
    capital_lambda_grid,
    capital_lambda_minus_one,
    eval_capital_lambda,
    eval_lambda,
    eval_lambda_derivative,
    eval_lommel_S,
    eval_modified_L,
    lambda_grid,
    lambda_minus_one,
    ode_residual,
    ode_residual_family,
    ode_residual_modified,
    pochhammer,
    recurrence_residual_modified,
)
from .errors import (
    AdmissibilityError,
    BracketingError,
    ConvergenceError,
    DegeneratePrefactorError,
    DomainError,
    LommelError,
    NoSignChangeError,
    ScanMissError,
)
from .inequalities import (
    DEFAULT_TOLERANCE,
    STRICT_TOLERANCE,
    CheckReport,
    GridSpec,
    RedhefferCapitalResult,
    RedhefferLambdaResult,
    check_cosh_sinh_ratio,
    check_increasing_family,
    check_logconvex_geomconvex_x,
    check_param_monotone_logconvex,
    check_product_unimodal,
    check_ratio_increasing,
    check_ratio_logconvex,
    check_turan,
    redheffer_exponent_capital,
    redheffer_exponent_lambda,
    richardson_zero,
    secant_limit_at_eta,
)
from .rayleigh import (
    RayleighComparison,
    RayleighTable,
    ZeroSumEstimate,
    compare_methods,
    lambda_coefficients,
    log_derivative_lambda,
    product_eval,
    rayleigh_from_zeros,
    rayleigh_newton_girard,
    rayleigh_table_from_zeros,
)
from .zeros import (
    BracketInterval,
    ReciprocalSumReport,
    ZeroEntry,
    ZeroTable,
    bracket_intervals,
    find_zeros,
    reciprocal_square_sum_report,
    refine_zero,
    tail_bracket,
    verify_reciprocal_square_sum,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "BracketInterval",
    "BracketingError",
    "CheckReport",
    "ConvergenceError",
    "DEFAULT_TOLERANCE",
    "DegeneratePrefactorError",
    "DomainError",
    "GridSpec",
    "HalfIntFamily",
    "LommelError",
    "NoSignChangeError",
    "Params",
    "RayleighComparison",
    "RayleighTable",
    "ReciprocalSumReport",
    "RedhefferCapitalResult",
    "RedhefferLambdaResult",
    "STRICT_TOLERANCE",
    "ScanMissError",
    "SeriesValue",
    "ZeroEntry",
    "ZeroSumEstimate",
    "ZeroTable",
    "bracket_intervals",
    "capital_lambda_grid",
    "capital_lambda_minus_one",
    "check_cosh_sinh_ratio",
    "check_increasing_family",
    "check_logconvex_geomconvex_x",
    "check_param_monotone_logconvex",
    "check_product_unimodal",
    "check_ratio_increasing",
    "check_ratio_logconvex",
    "check_turan",
    "compare_methods",
    "eval_capital_lambda",
    "eval_lambda",
    "eval_lambda_derivative",
    "eval_lommel_S",
    "eval_modified_L",
    "find_zeros",
    "lambda_coefficients",
    "lambda_grid",
    "lambda_minus_one",
    "log_derivative_lambda",
    "ode_residual",
    "ode_residual_family",
    "ode_residual_modified",
    "pochhammer",
    "product_eval",
    "rayleigh_from_zeros",
    "rayleigh_newton_girard",
    "rayleigh_table_from_zeros",
    "reciprocal_square_sum_report",
    "recurrence_residual_modified",
    "redheffer_exponent_capital",
    "redheffer_exponent_lambda",
    "refine_zero",
    "richardson_zero",
    "secant_limit_at_eta",
    "tail_bracket",
    "verify_reciprocal_square_sum",
]
