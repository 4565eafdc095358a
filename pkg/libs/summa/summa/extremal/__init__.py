from .ksz import KSZSampler, ksz_form
from .probe import (
    FormFamily,
    KSZFamily,
    RatioProbe,
    SlopeFit,
    ZalduendoFamily,
    divergence_verdict,
    fit_loglog_slope,
    lhs_for_family,
    ratio_probe,
    slope_verdict,
)
from .zalduendo import (
    choose_beta,
    diagonal_lq,
    diagonal_lq_limit,
    power_sum,
    power_sum_limit,
    zalduendo_coefficients,
    zalduendo_form,
)

__all__ = [
    "KSZSampler",
    "ksz_form",
    "zalduendo_form",
    "zalduendo_coefficients",
    "choose_beta",
    "power_sum",
    "power_sum_limit",
    "diagonal_lq",
    "diagonal_lq_limit",
    "lhs_for_family",
    "fit_loglog_slope",
    "SlopeFit",
    "FormFamily",
    "KSZFamily",
    "ZalduendoFamily",
    "RatioProbe",
    "ratio_probe",
    "slope_verdict",
    "divergence_verdict",
]
