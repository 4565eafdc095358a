"""JSON fixtures for forms.

A form is stored as::

    {"field": "real", "m": 2, "dims": [2, 2], "pspec": ["inf", "inf"],
     "coeffs": [1.0, 1.0, 1.0, -1.0]}

`coeffs` is the row-major flattening of the tensor; complex coefficients are
`[re, im]` pairs. Exponents are integers, "a/b" strings or "inf"; floats are
also accepted on load.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from summa.base import ScalarField
from summa.base.schema import exponent_json
from summa.exceptions import DimensionError

from .multilinear import MultilinearForm

logger = logging.getLogger(__name__)


def form_to_dict(form: MultilinearForm) -> dict[str, Any]:
    flat = form.coeffs.reshape(-1)
    if form.is_real:
        coeffs: list = [float(c) for c in flat]
    else:
        coeffs = [[float(c.real), float(c.imag)] for c in flat]
    return {
        "field": form.field.value,
        "m": form.m,
        "dims": list(form.dims),
        "pspec": [exponent_json(p) for p in form.pspec.entries],
        "coeffs": coeffs,
    }


def form_from_dict(data: dict[str, Any]) -> MultilinearForm:
    try:
        field = ScalarField(data.get("field", "real"))
        dims = tuple(int(n) for n in data["dims"])
        raw = data["coeffs"]
        pspec = data["pspec"]
    except (KeyError, ValueError, TypeError) as e:
        raise DimensionError(f"malformed form document: {e}") from e

    if "m" in data and int(data["m"]) != len(dims):
        raise DimensionError(f"m={data['m']} disagrees with dims {list(dims)}")

    coeffs = np.asarray(raw, dtype=float)
    if coeffs.ndim == 2 and coeffs.shape[1] == 2:
        coeffs = coeffs[:, 0] + 1j * coeffs[:, 1]
    elif coeffs.ndim != 1:
        raise DimensionError(
            "coeffs must be a flat list of numbers or of [re, im] pairs"
        )
    return MultilinearForm.from_coeffs(coeffs, pspec, field=field, dims=dims)


def save_form(form: MultilinearForm, path: str | Path):
    path = Path(path)
    try:
        with path.open("w") as f:
            json.dump(form_to_dict(form), f)
    except OSError as e:
        raise OSError(f"cannot write form to {path}: {e}") from e
    logger.debug(f"Saved {form!r} to {path}")


def load_form(path: str | Path) -> MultilinearForm:
    path = Path(path)
    try:
        with path.open() as f:
            data = json.load(f)
    except OSError as e:
        raise OSError(f"cannot read form from {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DimensionError(f"{path} is not valid JSON: {e}") from e
    return form_from_dict(data)
