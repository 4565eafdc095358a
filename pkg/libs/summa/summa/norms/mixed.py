from __future__ import annotations

from typing import Any

import numpy as np

from summa.base import ExponentVector, is_inf, to_exponent
from summa.exceptions import DimensionError


def lq_reduce(values: np.ndarray, q: Any, axis: int = -1) -> np.ndarray:
    """l_q norm of nonnegative `values` along one axis.

    Each fibre is divided by its maximum before powering, so neither overflow
    nor 0^0 can occur. q = inf reduces by the maximum.
    """
    q = to_exponent(q)
    if q < 1:
        raise DimensionError(f"l_q exponents must be >= 1, found {q}")
    values = np.moveaxis(np.asarray(values, dtype=float), axis, -1)
    scale = values.max(axis=-1)
    if is_inf(q):
        return scale
    qf = float(q)
    safe = np.where(scale > 0, scale, 1.0)
    total = np.sum((values / safe[..., None]) ** qf, axis=-1)
    return np.where(scale > 0, safe * total ** (1.0 / qf), 0.0)


def mixed_norm(values: Any, q: Any) -> float:
    """The nested norm l_{q_1}(l_{q_2}(... l_{q_k})) of a rank-k array.

    The innermost axis is reduced with q_k first, then axis k-1 with q_{k-1},
    and so on outwards.
    """
    q = ExponentVector.parse(q)
    values = np.abs(np.asarray(values))
    if values.ndim != q.k:
        raise DimensionError(
            f"array of rank {values.ndim} needs {values.ndim} exponents, got {q.k}"
        )
    if values.size == 0:
        raise DimensionError("cannot take the norm of an empty array")
    for exponent in reversed(q.entries):
        values = lq_reduce(values, exponent, axis=-1)
    return float(values)


def flat_lq(values: Any, q: Any) -> float:
    """The l_q norm of all entries, ignoring the array's shape"""
    values = np.abs(np.asarray(values)).reshape(-1)
    if values.size == 0:
        raise DimensionError("cannot take the norm of an empty array")
    return float(lq_reduce(values, q))


def lp_norm(x: Any, p: Any) -> float:
    return flat_lq(x, p)
