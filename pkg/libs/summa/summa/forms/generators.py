from __future__ import annotations

from typing import Any, Optional, Sequence

import numpy as np

from summa.base import INF, PSpec, ScalarField
from summa.exceptions import DimensionError

from .multilinear import MultilinearForm


def gaussian_form(
    dims: Sequence[int],
    pspec: Any,
    rng: np.random.Generator,
    field: ScalarField | str = ScalarField.REAL,
) -> MultilinearForm:
    """A form with i.i.d. standard normal coefficients.

    Complex forms draw the real and imaginary parts independently.
    """
    field = ScalarField(field)
    dims = tuple(dims)
    coeffs = rng.standard_normal(dims)
    if field == ScalarField.COMPLEX:
        coeffs = coeffs + 1j * rng.standard_normal(dims)
    return MultilinearForm.from_coeffs(coeffs, pspec, field=field, dims=dims)


def sign_form(
    dims: Sequence[int], pspec: Any, rng: np.random.Generator
) -> MultilinearForm:
    """A real form with i.i.d. uniform +-1 coefficients"""
    dims = tuple(dims)
    coeffs = rng.choice(np.array([-1.0, 1.0]), size=dims)
    return MultilinearForm.from_coeffs(
        coeffs, pspec, field=ScalarField.REAL, dims=dims
    )


def diagonal_form(
    diag: Sequence[complex | float],
    pspec: Any,
    m: Optional[int] = None,
    field: Optional[ScalarField | str] = None,
) -> MultilinearForm:
    """The form with `diag[j]` at (j, ..., j) and zeros elsewhere"""
    pspec = PSpec.parse(pspec)
    m = pspec.m if m is None else m
    diag = np.asarray(diag)
    if diag.ndim != 1 or diag.size == 0:
        raise DimensionError("diagonal must be a non-empty vector")
    n = diag.size
    coeffs = np.zeros((n,) * m, dtype=diag.dtype if np.iscomplexobj(diag) else float)
    idx = np.arange(n)
    coeffs[(idx,) * m] = diag
    return MultilinearForm.from_coeffs(coeffs, pspec, field=field, dims=(n,) * m)


def hadamard_form(pspec: Any = None) -> MultilinearForm:
    """The 2x2 bilinear form [[1, 1], [1, -1]], on l_inf x l_inf by default.

    Extremal for the 4/3 inequality: LHS 4^{3/4}, norm 2.
    """
    pspec = PSpec.uniform(INF, 2) if pspec is None else pspec
    return MultilinearForm.from_coeffs(
        [[1.0, 1.0], [1.0, -1.0]], pspec, field=ScalarField.REAL
    )
