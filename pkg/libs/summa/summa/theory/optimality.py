from __future__ import annotations

from fractions import Fraction
from typing import Any, NamedTuple, Optional

from summa.base import ExponentVector, PSpec, Verdict
from summa.exceptions import DimensionError, HypothesisError

from .exponents import HALF, check_arity, ksz_norm_exponent


class OptimalityBounds(NamedTuple):
    """Lower bounds for any admissible flat exponent rho"""

    rho_ksz: Fraction
    rho_diag: Fraction
    s: Fraction


def optimality_lower_bounds(k: int, m: int, pspec: Any) -> OptimalityBounds:
    """rho >= 2k / (m + 1 - 2|1/p|) from random sign forms and
    rho >= 1 / (1 - |1/p|) from diagonal forms; s is the larger one.

    The diagonal bound wins exactly when k <= (m + 1 - 2|1/p|) / (2 - 2|1/p|).
    """
    pspec = PSpec.parse(pspec)
    check_arity(k, m, pspec)
    inv_sum = pspec.inv_sum
    if inv_sum > HALF:
        raise HypothesisError("|1/p| <= 1/2 (subcritical range)", f"|1/p| = {inv_sum}")
    rho_ksz = Fraction(2 * k) / (m + 1 - 2 * inv_sum)
    rho_diag = 1 / (1 - inv_sum)
    threshold = (m + 1 - 2 * inv_sum) / (2 - 2 * inv_sum)
    s = rho_diag if k <= threshold else rho_ksz
    return OptimalityBounds(rho_ksz=rho_ksz, rho_diag=rho_diag, s=s)


def ksz_theory_slope(k: int, m: int, pspec: Any, q: Any) -> Fraction:
    """Predicted log-log slope of LHS / ||T|| for random sign forms.

    The k-block tensor of a +-1 form has N^k unimodular entries, so its mixed
    q-norm is N^{1/q_1 + ... + 1/q_k}; the norm grows like N^{1/2 + sum alpha}.
    """
    q = ExponentVector.parse(q)
    if q.k == 1 and k > 1:
        q = ExponentVector.uniform(q.entries[0], k)
    elif q.k != k:
        raise DimensionError(f"expected {k} exponents, got {q.k}")
    return q.reciprocal_sum - ksz_norm_exponent(m, pspec)


def expected_verdict(theory_slope: Any, threshold: float) -> Optional[Verdict]:
    """Grows above the threshold, Bounded at or below zero, no contract between"""
    slope = float(theory_slope)
    if slope > threshold:
        return Verdict.GROWS
    if slope <= 0:
        return Verdict.BOUNDED
    return None
