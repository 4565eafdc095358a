from __future__ import annotations

from fractions import Fraction
from typing import Any

from summa.base import ExponentVector, PSpec, is_inf, reciprocal
from summa.exceptions import DimensionError, HypothesisError

from .exponents import HALF

SLACK = 1e-12


def _le(a: Fraction, b: Fraction) -> bool:
    """a <= b exactly, or within the comparison slack"""
    return a <= b or float(a - b) <= SLACK


def bh_partial_admissible(k: int, q: Any) -> bool:
    """Whether 1/q_1 + ... + 1/q_k <= (k + 1)/2 for q in [1, 2]^k"""
    q = ExponentVector.parse(q)
    if q.k != k:
        raise DimensionError(f"expected {k} exponents, got {q.k}")
    for entry in q.entries:
        if is_inf(entry) or entry > 2:
            raise DimensionError(f"exponents must lie in [1, 2], found {entry}")
    return _le(q.reciprocal_sum, Fraction(k + 1, 2))


def hl_admissible(k: int, pspec: Any, q: Any) -> bool:
    """Whether q is an admissible exponent for k-block sums on l_p, |1/p| <= 1/2.

    Every q_j must lie in [(1 - |1/p|)^{-1}, 2] and
    1/q_1 + ... + 1/q_k <= (k + 1)/2 - |1/p|.
    """
    pspec = PSpec.parse(pspec)
    q = ExponentVector.parse(q)
    inv_sum = pspec.inv_sum
    if inv_sum > HALF:
        raise HypothesisError(
            "|1/p| <= 1/2 (subcritical range)", f"|1/p| = {inv_sum}"
        )
    if q.k != k:
        raise DimensionError(f"expected {k} exponents, got {q.k}")

    lower = 1 / (1 - inv_sum)
    for entry in q.entries:
        if is_inf(entry):
            return False
        if not (_le(lower, entry) and _le(entry, Fraction(2))):
            return False
    return _le(q.reciprocal_sum, Fraction(k + 1, 2) - inv_sum)


def dominates(q: Any, rho: Fraction) -> bool:
    """Whether every q_j >= rho, so the flat rho-sum bounds the q-sum"""
    q = ExponentVector.parse(q)
    return all(_le(reciprocal(entry), 1 / rho) for entry in q.entries)
