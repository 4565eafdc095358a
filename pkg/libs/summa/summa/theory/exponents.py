"""Summability exponents of the Hardy-Littlewood / Bohnenblust-Hille family.

All arithmetic is exact: exponents are `Fraction`s and infinity only enters
through `reciprocal`.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any

from summa.base import (
    PSpec,
    Regime,
    RegimeClassification,
    is_inf,
    reciprocal,
    to_exponent,
)
from summa.exceptions import DimensionError, HypothesisError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
HL_RANGE = "|1/p| < 1 (Hardy-Littlewood range)"


def classify(pspec: Any) -> RegimeClassification:
    pspec = PSpec.parse(pspec)
    inv_sum = pspec.inv_sum
    if inv_sum < HALF:
        regime = Regime.SUBCRITICAL_HL
    elif inv_sum < 1:
        regime = Regime.CRITICAL_BAND
    else:
        regime = Regime.OUT_OF_SCOPE
    return RegimeClassification(regime=regime, inv_sum=inv_sum)


def check_arity(k: int, m: int, pspec: PSpec | None = None):
    if not 1 <= k <= m:
        raise DimensionError(f"need 1 <= k <= m, found k={k}, m={m}")
    if pspec is not None and pspec.m != m:
        raise DimensionError(f"pspec has {pspec.m} exponents, expected m={m}")


def require_hl_range(pspec: PSpec) -> Fraction:
    """|1/p| if it lies in [0, 1), otherwise a hypothesis error"""
    inv_sum = pspec.inv_sum
    if inv_sum >= 1:
        raise HypothesisError(HL_RANGE, f"|1/p| = {inv_sum} for p = ({pspec})")
    return inv_sum


def diagonal_exponent(pspec: Any) -> Fraction:
    """(1 - |1/p|)^{-1}, the exponent of the diagonal (Holder) estimate"""
    pspec = PSpec.parse(pspec)
    inv_sum = require_hl_range(pspec)
    return 1 / (1 - inv_sum)


def subcritical_exponent(k: int, inv_sum: Fraction) -> Fraction:
    return Fraction(2 * k) / (k + 1 - 2 * inv_sum)


def hl_exponent(k: int, m: int, pspec: Any) -> Fraction:
    """The optimal exponent rho for k-block partial sums of m-linear forms.

    (1 - |1/p|)^{-1} when 1/2 <= |1/p| < 1, and 2k / (k + 1 - 2|1/p|) when
    0 <= |1/p| < 1/2. Both agree (rho = 2) at |1/p| = 1/2.
    """
    pspec = PSpec.parse(pspec)
    check_arity(k, m, pspec)
    inv_sum = require_hl_range(pspec)
    if inv_sum >= HALF:
        return 1 / (1 - inv_sum)
    return subcritical_exponent(k, inv_sum)


def hl_exponent_uniform(k: int, m: int, p: Any) -> Fraction:
    """The same exponent when every p_j equals p, written in terms of p:
    p / (p - m) for m < p <= 2m, 2kp / (kp + p - 2m) for p > 2m, and
    2k / (k + 1) for p = inf.
    """
    check_arity(k, m)
    p = to_exponent(p)
    if is_inf(p):
        return Fraction(2 * k, k + 1)
    if p <= m:
        raise HypothesisError("m < p", f"p = {p}, m = {m}")
    if p <= 2 * m:
        return p / (p - m)
    return 2 * k * p / (k * p + p - 2 * m)


def ksz_alpha(p: Any) -> Fraction:
    """1/2 - 1/p for p >= 2, 0 below"""
    p = to_exponent(p)
    if p < 1:
        raise DimensionError(f"exponent must be >= 1, found {p}")
    if p >= 2:
        return HALF - reciprocal(p)
    return Fraction(0)


def ksz_norm_exponent(m: int, pspec: Any) -> Fraction:
    """Growth exponent of the norm of a random +-1 form: 1/2 + sum alpha(p_j).

    Equals (m + 1)/2 - |1/p| when every p_j >= 2.
    """
    pspec = PSpec.parse(pspec)
    if pspec.m != m:
        raise DimensionError(f"pspec has {pspec.m} exponents, expected m={m}")
    return HALF + sum((ksz_alpha(p) for p in pspec.entries), Fraction(0))
