from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from summa.base import ExponentVector, PSpec, from_reciprocal, reciprocal, to_exponent
from summa.exceptions import DimensionError, HypothesisError

from .exponents import HALF, check_arity

WEIGHT_SLACK = 1e-12


def _weight(value: Any) -> Fraction:
    weight = to_exponent(value)
    if not isinstance(weight, Fraction):
        raise DimensionError(f"invalid interpolation weight {value!r}")
    return weight


def interpolate_exponents(
    vectors: Sequence[Any], weights: Sequence[Any]
) -> ExponentVector:
    """Interpolate exponent vectors: 1/q_j = sum_i theta_i / q^(i)_j.

    Weights must be nonnegative and sum to 1. Exact for rational input.
    """
    vectors = [ExponentVector.parse(v) for v in vectors]
    weights = [_weight(w) for w in weights]
    if not vectors or len(vectors) != len(weights):
        raise DimensionError(
            f"need one weight per vector, got {len(vectors)} vectors and "
            f"{len(weights)} weights"
        )
    if any(w < 0 for w in weights):
        raise DimensionError(f"weights must be nonnegative, found {weights}")
    if abs(float(sum(weights)) - 1) > WEIGHT_SLACK:
        raise DimensionError(f"weights must sum to 1, found {float(sum(weights))}")
    k = vectors[0].k
    if any(v.k != k for v in vectors):
        raise DimensionError("all exponent vectors must have the same length")

    reciprocals = [
        sum(
            (w * reciprocal(v.entries[j]) for v, w in zip(vectors, weights)),
            Fraction(0),
        )
        for j in range(k)
    ]
    return ExponentVector(entries=[from_reciprocal(r) for r in reciprocals])


def lambda_zero(k: int, inv_sum: Any) -> Fraction:
    """2k / (k + 1 + 2(k - 1)|1/p|), the first exponent of the interpolated vector"""
    inv_sum = Fraction(inv_sum)
    return Fraction(2 * k) / (k + 1 + 2 * (k - 1) * inv_sum)


def bh_interpolation_endpoints(k: int) -> tuple[ExponentVector, ExponentVector]:
    """(1, 2, ..., 2) and (2k/(k+1), ..., 2k/(k+1))"""
    if k < 1:
        raise DimensionError(f"k must be >= 1, found {k}")
    first = ExponentVector(entries=[1] + [2] * (k - 1))
    second = ExponentVector.uniform(Fraction(2 * k, k + 1), k)
    return first, second


def bh_interpolation_weights(inv_sum: Any) -> tuple[Fraction, Fraction]:
    inv_sum = Fraction(inv_sum)
    if not 0 <= inv_sum <= HALF:
        raise HypothesisError("|1/p| <= 1/2 (subcritical range)", f"|1/p| = {inv_sum}")
    return 2 * inv_sum, 1 - 2 * inv_sum


def interpolated_bh_exponent(k: int, inv_sum: Any) -> ExponentVector:
    """(lambda_0, rho, ..., rho), interpolated between the two endpoints"""
    return interpolate_exponents(
        bh_interpolation_endpoints(k), bh_interpolation_weights(inv_sum)
    )


def lambda_chain(k: int, pspec: Any) -> tuple[Fraction, ...]:
    """lambda_0, ..., lambda_m with 1/lambda_i = 1/lambda_0 - sum_{j<=i} 1/p_j.

    The last entry is the exponent rho for |1/p| <= 1/2.
    """
    pspec = PSpec.parse(pspec)
    check_arity(k, pspec.m, pspec)
    inv_sum = pspec.inv_sum
    if inv_sum > HALF:
        raise HypothesisError("|1/p| <= 1/2 (subcritical range)", f"|1/p| = {inv_sum}")
    chain = [lambda_zero(k, inv_sum)]
    current = 1 / chain[0]
    for p in pspec.entries:
        current -= reciprocal(p)
        chain.append(1 / current)
    return tuple(chain)
