"""Diagonal forms sum_j j^beta x^(1)_j ... x^(m)_j.

Their norm is ||(j^beta)||_rho exactly, rho = (1 - |1/p|)^{-1}, and every
partition collapses their block tensor onto the diagonal, so everything about
them reduces to power sums of j^beta and the Riemann zeta function.
"""
from __future__ import annotations

import math
from typing import Any

import numpy as np
from scipy.special import zeta

from summa.base import PSpec, to_exponent
from summa.exceptions import DimensionError, HypothesisError
from summa.forms import MultilinearForm, diagonal_form
from summa.theory import diagonal_exponent


def zalduendo_coefficients(n: int, beta: float) -> np.ndarray:
    if n < 1:
        raise DimensionError(f"N must be >= 1, found {n}")
    return np.arange(1, n + 1, dtype=float) ** float(beta)


def zalduendo_form(m: int, n: int, pspec: Any, beta: float) -> MultilinearForm:
    """The m-linear diagonal form with j^beta at (j, ..., j), j = 1..N"""
    pspec = PSpec.parse(pspec)
    if pspec.m != m:
        raise DimensionError(f"pspec has {pspec.m} exponents, expected m={m}")
    return diagonal_form(zalduendo_coefficients(n, beta), pspec, m=m)


def choose_beta(s: Any, pspec: Any) -> float:
    """Midpoint of (-1/s, -1/rho): the sum of j^{beta s} diverges while the
    norm ||(j^beta)||_rho stays bounded.
    """
    rho = diagonal_exponent(pspec)
    s = to_exponent(s)
    if not 1 <= s < rho:
        raise HypothesisError(
            "1 <= s < (1 - |1/p|)^{-1}", f"s = {float(s)}, rho = {rho}"
        )
    return -float(1 / s + 1 / rho) / 2


def power_sum(n: int, exponent: float) -> float:
    """sum_{j=1}^N j^exponent"""
    return float(np.sum(zalduendo_coefficients(n, exponent)))


def power_sum_limit(exponent: float) -> float:
    """sum_{j>=1} j^exponent: zeta(-exponent) below -1, infinite otherwise"""
    if exponent < -1:
        return float(zeta(-exponent, 1))
    return math.inf


def diagonal_lq(n: int, beta: float, q: float) -> float:
    """||(j^beta)_{j<=N}||_q without materialising the form"""
    if math.isinf(q):
        return max(1.0, float(n) ** beta)
    return power_sum(n, beta * q) ** (1 / q)


def diagonal_lq_limit(beta: float, q: float) -> float:
    """The N -> inf limit of `diagonal_lq`"""
    if math.isinf(q):
        return 1.0 if beta <= 0 else math.inf
    return power_sum_limit(beta * q) ** (1 / q)
