from .diagonal import diagonal_closed_form, upper_bound_diagonal
from .estimation import NormEstimator, dual_norm, estimate_norm, maximize_slot
from .mixed import flat_lq, lp_norm, mixed_norm

__all__ = [
    "mixed_norm",
    "flat_lq",
    "lp_norm",
    "maximize_slot",
    "dual_norm",
    "NormEstimator",
    "estimate_norm",
    "upper_bound_diagonal",
    "diagonal_closed_form",
]
