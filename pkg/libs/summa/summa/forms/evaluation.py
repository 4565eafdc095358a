from __future__ import annotations

import string
from typing import Sequence

import numpy as np

from summa.base import PartitionSpec
from summa.exceptions import DimensionError, StructuralError

from .multilinear import MultilinearForm


def _check_args(form: MultilinearForm, args: Sequence[np.ndarray]) -> list[np.ndarray]:
    if len(args) != form.m:
        raise DimensionError(f"expected {form.m} arguments, got {len(args)}")
    checked = []
    for slot, (x, n) in enumerate(zip(args, form.dims)):
        x = np.asarray(x)
        if x.ndim != 1 or x.shape[0] != n:
            raise DimensionError(
                f"argument {slot} has shape {x.shape}, slot extent is {n}"
            )
        checked.append(x)
    return checked


def evaluate(form: MultilinearForm, args: Sequence[np.ndarray]) -> complex | float:
    """T(x_1, ..., x_m) by contracting the coefficient tensor slot by slot.

    The last slot is contracted first, so the accumulation order is fixed.
    """
    args = _check_args(form, args)
    value = form.coeffs
    for x in reversed(args):
        value = value @ x
    value = value.item()
    if form.is_real and not np.iscomplexobj(value):
        return float(value)
    return value


def contract_except(
    coeffs: np.ndarray, args: Sequence[np.ndarray], slot: int
) -> np.ndarray:
    """The vector c_i = T(x_1, ..., e_i, ..., x_m) for the given slot"""
    value = coeffs
    m = coeffs.ndim
    for s in range(m - 1, slot, -1):
        value = value @ args[s]
    for s in range(slot):
        value = np.tensordot(args[s], value, axes=(0, 0))
    return value


def _block_extents(form: MultilinearForm, part: PartitionSpec) -> tuple[int, ...]:
    if part.m != form.m:
        raise DimensionError(
            f"partition covers {part.m} slots but the form has {form.m}"
        )
    extents = []
    for block, slots in enumerate(part.index_sets, start=1):
        sizes = {form.dims[s] for s in slots}
        if len(sizes) != 1:
            raise StructuralError(
                f"block {block} mixes slot extents {sorted(sizes)}"
            )
        extents.append(sizes.pop())
    return tuple(extents)


def block_coefficient(
    form: MultilinearForm, part: PartitionSpec, idx: Sequence[int]
) -> complex | float:
    """T(e_{i_1}^{n_1}, ..., e_{i_k}^{n_k}), indices 0-based.

    Each i_j is written into every slot of block j.
    """
    extents = _block_extents(form, part)
    if len(idx) != part.k:
        raise DimensionError(f"expected {part.k} block indices, got {len(idx)}")
    for block, (i, n) in enumerate(zip(idx, extents), start=1):
        if not 0 <= i < n:
            raise DimensionError(f"index {i} out of range for block {block} (< {n})")
    full = tuple(idx[label - 1] for label in part.assignment)
    return form.coeffs[full].item()


def block_value_tensor(form: MultilinearForm, part: PartitionSpec) -> np.ndarray:
    """All block coefficients as a rank-k array of shape (per-block extents)"""
    _block_extents(form, part)
    if part.k > len(string.ascii_letters):
        raise DimensionError(f"too many blocks: {part.k}")
    letters = string.ascii_letters
    subscripts = "".join(letters[label - 1] for label in part.assignment)
    output = letters[: part.k]
    # einsum with repeated input letters reads the generalized diagonal
    return np.array(np.einsum(f"{subscripts}->{output}", form.coeffs))
