from __future__ import annotations

from typing import Any

import numpy as np

from summa.base import NormEstimate, NormMethod, PSpec, reciprocal
from summa.exceptions import DimensionError
from summa.forms import MultilinearForm
from summa.theory import diagonal_exponent

from .mixed import lp_norm


def upper_bound_diagonal(diag_coeffs: Any, pspec: Any) -> float:
    """||c||_rho with rho = (1 - |1/p|)^{-1}.

    By Holder's inequality this bounds the norm of the diagonal form
    sum_j c_j x^(1)_j ... x^(m)_j from above.
    """
    rho = diagonal_exponent(pspec)
    diag = np.asarray(diag_coeffs)
    if diag.ndim != 1 or diag.size == 0:
        raise DimensionError("diagonal must be a non-empty vector")
    return lp_norm(diag, rho)


def phase(c: np.ndarray) -> np.ndarray:
    """Unit-modulus multipliers x with c * x = |c|; zeros map to 1"""
    c = np.asarray(c)
    magnitude = np.abs(c)
    safe = np.where(magnitude > 0, magnitude, 1.0)
    if np.iscomplexobj(c):
        return np.where(magnitude > 0, np.conj(c) / safe, 1.0 + 0j)
    return np.where(c < 0, -1.0, 1.0)


def diagonal_closed_form(form: MultilinearForm) -> NormEstimate:
    """The exact norm ||c||_rho of a diagonal form, with a witness.

    With a_i = |c_i| / ||c||_rho, the point x^(j)_i = a_i^{rho / p_j} lies on
    the unit sphere of l_{p_j} and attains the Holder bound; the phase of c is
    absorbed into the last slot.
    """
    pspec: PSpec = form.pspec
    rho = diagonal_exponent(pspec)
    diag = form.diagonal()
    value = lp_norm(diag, rho)
    n = diag.size

    if value == 0:
        witness = [np.eye(1, n, 0).reshape(-1) for _ in range(form.m)]
        return NormEstimate(
            value=0.0,
            method=NormMethod.DIAGONAL_CLOSED_FORM,
            certified=True,
            witness=tuple(witness),
        )

    a = np.abs(diag) / value
    witness = []
    for p in pspec.entries:
        power = float(rho * reciprocal(p))
        witness.append(np.power(a, power) if power > 0 else np.ones(n))
    last_phase = phase(diag)
    witness[-1] = witness[-1] * last_phase
    return NormEstimate(
        value=value,
        method=NormMethod.DIAGONAL_CLOSED_FORM,
        certified=True,
        witness=tuple(witness),
    )
