"""Bivariate means, their hyperbolic kernels, and sharp bound verification."""

from .kernels import (
    curvature_coefficient,
    curvature_kernel,
    log_gap,
    log_gap_residual,
    log_gap_slope,
    slope_kernel,
)
from .means import (
    MeanKind,
    eval_mean,
    eval_mean_normalized,
    growth_offset,
    half_log_ratio,
    log_mean_normalized,
    parse_mean,
    quadratic_coefficient,
    toader_mean,
)
from .series import CoefficientSeq, detect_sign_change, series_positive_root
from .solver import (
    EndpointReport,
    SharpConstants,
    SharpConstantTable,
    best_exponent,
    chain_margins,
    chain_table,
    constants_table,
    find_witness,
    gap_peak,
    literature_endpoints,
    peak_ratio,
    sharp_constants,
    sharp_factor,
    sharp_lower_exponent,
    squeeze_margins,
    verify_chain,
    verify_seiffert_lehmer,
    verify_squeeze,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientSeq",
    "EndpointReport",
    "MeanKind",
    "SharpConstantTable",
    "SharpConstants",
    "best_exponent",
    "chain_margins",
    "chain_table",
    "constants_table",
    "curvature_coefficient",
    "curvature_kernel",
    "detect_sign_change",
    "eval_mean",
    "eval_mean_normalized",
    "find_witness",
    "gap_peak",
    "growth_offset",
    "half_log_ratio",
    "literature_endpoints",
    "log_gap",
    "log_gap_residual",
    "log_gap_slope",
    "log_mean_normalized",
    "parse_mean",
    "peak_ratio",
    "quadratic_coefficient",
    "series_positive_root",
    "sharp_constants",
    "sharp_factor",
    "sharp_lower_exponent",
    "slope_kernel",
    "squeeze_margins",
    "toader_mean",
    "verify_chain",
    "verify_seiffert_lehmer",
    "verify_squeeze",
    "__version__",
]
