"""Upper estimates for the optimal constants of the inequalities.

Several formulas may apply to one configuration; `constant_bounds` reports
every applicable one and `unified_constant_bound` the smallest.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Optional

from summa.base import (
    ConstantBound,
    ExponentVector,
    PartitionSpec,
    PSpec,
    ScalarField,
    to_exponent,
)
from summa.exceptions import DimensionError, HypothesisError

from .admissibility import dominates, hl_admissible
from .exponents import HALF, check_arity, hl_exponent, hl_exponent_uniform, require_hl_range
from .special import harmonic_number, lanczos_gamma

logger = logging.getLogger(__name__)

# log2 of the real constant at k = 13 plus 13/2, i.e. H_12/2 + 13/2
REAL_TAIL_EXPONENT = Fraction(446381, 55440)
REAL_SMALL_K = 13

DIAGONAL_SUM = "diagonal-sum"
UNIFIED_SUBCRITICAL = "unified-subcritical"
BLOCK_QUOTIENT = "block-quotient"
PARTIAL_SUM_REMARK = "partial-sum-remark"
CRITICAL_BAND = "critical-band"
BH_BEST_KNOWN = "bh-best-known"


def base_constant(field: ScalarField | str) -> float:
    """sqrt(2) over the reals, 2/sqrt(pi) over the complex numbers"""
    if ScalarField(field) == ScalarField.REAL:
        return math.sqrt(2)
    return 2 / math.sqrt(math.pi)


def bh_constant(k: int, field: ScalarField | str) -> float:
    if k < 1:
        raise DimensionError(f"k must be >= 1, found {k}")
    field = ScalarField(field)
    if k == 1:
        return 1.0

    if field == ScalarField.COMPLEX:
        log_value = math.fsum(
            j / (2 - 2 * j) * math.log(lanczos_gamma(2 - 1 / j))
            for j in range(2, k + 1)
        )
        return math.exp(log_value)

    if k <= REAL_SMALL_K:
        return math.sqrt(2) ** harmonic_number(k - 1)
    log_value = math.log(2) * float(REAL_TAIL_EXPONENT - Fraction(k, 2))
    log_value += math.fsum(
        j / (2 - 2 * j) * math.log(lanczos_gamma(1.5 - 1 / j) / math.sqrt(math.pi))
        for j in range(REAL_SMALL_K + 1, k + 1)
    )
    return math.exp(log_value)


def bh_constant_bound(k: int, field: ScalarField | str) -> ConstantBound:
    """Best known estimate of the Bohnenblust-Hille constant B_k"""
    return ConstantBound(
        value=bh_constant(k, field), formula_id=BH_BEST_KNOWN, field=ScalarField(field)
    )


def _subcritical_value(k: int, inv_sum: Fraction, field: ScalarField) -> float:
    c = base_constant(field)
    exponent = float(2 * (k - 1) * inv_sum)
    return c**exponent * bh_constant(k, field) ** float(1 - 2 * inv_sum)


def _block_quotient_applies(pspec: PSpec, part: Optional[PartitionSpec]) -> bool:
    """p constant within every block and p_j >= n_j, so that the m-linear sum
    is a k-linear sum on l_{p_1/n_1} x ... x l_{p_k/n_k}
    """
    if part is None:
        return pspec.is_uniform() and pspec.entries[0] >= pspec.m
    for slots, n in zip(part.index_sets, part.multiplicities):
        exponents = {pspec.entries[s] for s in slots}
        if len(exponents) != 1 or exponents.pop() < n:
            return False
    return True


def constant_bounds(
    k: int,
    m: int,
    pspec: Any,
    field: ScalarField | str,
    part: Optional[PartitionSpec] = None,
) -> list[ConstantBound]:
    """Every applicable estimate of C(k, m, p, K), the constant of the k-block
    partial-sum inequality with the flat exponent `hl_exponent(k, m, pspec)`.

    Without a partition, the block-quotient estimate is only reported for
    uniform exponents (where it holds for every partition).
    """
    pspec = PSpec.parse(pspec)
    field = ScalarField(field)
    check_arity(k, m, pspec)
    if part is not None and (part.m != m or part.k != k):
        raise DimensionError(
            f"partition ({part}) does not split {m} slots into {k} blocks"
        )
    inv_sum = require_hl_range(pspec)
    c = base_constant(field)

    bounds: list[tuple[float, str]] = []
    if k == 1:
        bounds.append((1.0, DIAGONAL_SUM))
    if inv_sum <= HALF:
        bounds.append((_subcritical_value(k, inv_sum, field), UNIFIED_SUBCRITICAL))
    if _block_quotient_applies(pspec, part):
        # the quotient exponents p_j / n_j have the same |1/p|
        if inv_sum < HALF:
            value = _subcritical_value(k, inv_sum, field)
        else:
            value = c ** (k - 1)
        bounds.append((value, BLOCK_QUOTIENT))
    if inv_sum <= HALF:
        bounds.append((c ** (k - 1), PARTIAL_SUM_REMARK))
    if inv_sum >= HALF:
        bounds.append((c ** (m - 1), CRITICAL_BAND))

    return [
        ConstantBound(value=value, formula_id=formula_id, field=field)
        for value, formula_id in bounds
    ]


def unified_constant_bound(
    k: int,
    m: int,
    pspec: Any,
    field: ScalarField | str,
    part: Optional[PartitionSpec] = None,
) -> ConstantBound:
    """The smallest applicable constant estimate; ties keep the first formula"""
    bounds = constant_bounds(k, m, pspec, field, part)
    best = min(bounds, key=lambda bound: bound.value)
    logger.debug(
        f"C(k={k}, m={m}, p=({PSpec.parse(pspec)})) = {best.value} "
        f"[{best.formula_id}] out of {len(bounds)} formulas"
    )
    return best


def mixed_constant_bound(
    k: int,
    m: int,
    pspec: Any,
    q: Any,
    field: ScalarField | str,
    part: Optional[PartitionSpec] = None,
) -> ConstantBound:
    """Constant for a mixed exponent q.

    When every q_j is at least the flat exponent rho the flat estimate applies
    (the mixed sum is dominated by the flat rho-sum). Otherwise q must be
    admissible in the subcritical range, where B_{k,(1,2,...,2)} <= c^{k-1}
    covers every admissible q.
    """
    pspec = PSpec.parse(pspec)
    q = ExponentVector.parse(q)
    field = ScalarField(field)
    rho = hl_exponent(k, m, pspec)
    if q.k != k:
        raise DimensionError(f"expected {k} exponents, got {q.k}")
    if dominates(q, rho):
        return unified_constant_bound(k, m, pspec, field, part)
    if pspec.inv_sum <= HALF and hl_admissible(k, pspec, q):
        return ConstantBound(
            value=base_constant(field) ** (k - 1),
            formula_id=PARTIAL_SUM_REMARK,
            field=field,
        )
    raise HypothesisError(
        "q admissible for p",
        f"q = ({q}) for p = ({pspec}), k = {k}",
    )


def table_entry(
    k: int, m: int, p: Any, field: ScalarField | str
) -> tuple[Fraction, ConstantBound]:
    """(rho, C) for a single exponent p in (m, inf], every slot on l_p"""
    p = to_exponent(p)
    rho = hl_exponent_uniform(k, m, p)
    return rho, unified_constant_bound(k, m, PSpec.uniform(p, m), field)
