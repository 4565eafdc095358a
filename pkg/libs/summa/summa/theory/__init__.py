from .admissibility import bh_partial_admissible, hl_admissible
from .constants import (
    base_constant,
    bh_constant,
    bh_constant_bound,
    constant_bounds,
    mixed_constant_bound,
    table_entry,
    unified_constant_bound,
)
from .exponents import (
    classify,
    diagonal_exponent,
    hl_exponent,
    hl_exponent_uniform,
    ksz_alpha,
    ksz_norm_exponent,
    require_hl_range,
)
from .interpolation import (
    bh_interpolation_endpoints,
    bh_interpolation_weights,
    interpolate_exponents,
    interpolated_bh_exponent,
    lambda_chain,
    lambda_zero,
)
from .optimality import (
    OptimalityBounds,
    expected_verdict,
    ksz_theory_slope,
    optimality_lower_bounds,
)
from .special import harmonic_number, lanczos_gamma

__all__ = [
    # exponents
    "classify",
    "diagonal_exponent",
    "hl_exponent",
    "hl_exponent_uniform",
    "ksz_alpha",
    "ksz_norm_exponent",
    "require_hl_range",
    # admissibility
    "bh_partial_admissible",
    "hl_admissible",
    # interpolation
    "interpolate_exponents",
    "interpolated_bh_exponent",
    "lambda_zero",
    "lambda_chain",
    "bh_interpolation_endpoints",
    "bh_interpolation_weights",
    # constants
    "base_constant",
    "bh_constant",
    "bh_constant_bound",
    "constant_bounds",
    "unified_constant_bound",
    "mixed_constant_bound",
    "table_entry",
    # optimality
    "OptimalityBounds",
    "optimality_lower_bounds",
    "ksz_theory_slope",
    "expected_verdict",
    # special functions
    "lanczos_gamma",
    "harmonic_number",
]
