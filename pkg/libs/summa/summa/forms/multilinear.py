from __future__ import annotations

import math
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from theflow.settings import settings as flowsettings

from summa.base import PSpec, ScalarField
from summa.exceptions import DimensionError, ResourceError

TENSOR_BUDGET: int = getattr(flowsettings, "SUMMA_TENSOR_BUDGET", 10**8)


class MultilinearForm(BaseModel):
    """An m-linear form T on l_{p_1}^{N_1} x ... x l_{p_m}^{N_m}, stored densely.

    `coeffs[j_1, ..., j_m] = T(e_{j_1}, ..., e_{j_m})`. Real forms hold a float64
    tensor, complex forms a complex128 tensor; the tensor is read-only.

    Attributes:
        field: the scalar field
        dims: extent of each slot
        pspec: the exponents of the domain spaces
        coeffs: dense coefficient tensor of shape `dims`
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    field: ScalarField
    dims: tuple[int, ...]
    pspec: PSpec
    coeffs: np.ndarray

    @model_validator(mode="before")
    @classmethod
    def _prepare(cls, data: Any):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        coeffs = np.asarray(data.get("coeffs"))
        dims = data.get("dims")
        if dims is None:
            dims = coeffs.shape
        dims = tuple(int(n) for n in dims)
        if any(n < 1 for n in dims):
            raise DimensionError(f"every extent must be >= 1, found {dims}")

        size = math.prod(dims)
        if size > TENSOR_BUDGET:
            raise ResourceError(
                f"{size} coefficients exceed the tensor budget of {TENSOR_BUDGET}"
            )
        if coeffs.size != size:
            raise DimensionError(
                f"coefficient tensor has {coeffs.size} entries, dims {dims} "
                f"require {size}"
            )

        field = ScalarField(data.get("field") or _infer_field(coeffs))
        if field == ScalarField.REAL:
            if np.iscomplexobj(coeffs):
                if np.any(coeffs.imag != 0):
                    raise DimensionError(
                        "real forms must have zero imaginary coefficients"
                    )
                coeffs = coeffs.real
            coeffs = np.array(coeffs, dtype=np.float64).reshape(dims)
        else:
            coeffs = np.array(coeffs, dtype=np.complex128).reshape(dims)
        coeffs.setflags(write=False)

        pspec = PSpec.parse(data.get("pspec"))
        if pspec.m != len(dims):
            raise DimensionError(
                f"pspec has {pspec.m} exponents but the form has {len(dims)} slots"
            )

        data.update(field=field, dims=dims, coeffs=coeffs, pspec=pspec)
        return data

    @classmethod
    def from_coeffs(
        cls,
        coeffs: Any,
        pspec: Any,
        field: Optional[ScalarField | str] = None,
        dims: Optional[tuple[int, ...]] = None,
    ) -> "MultilinearForm":
        try:
            return cls(coeffs=coeffs, pspec=pspec, field=field, dims=dims)
        except ValidationError as e:
            raise DimensionError(f"invalid form: {e}") from e

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def is_real(self) -> bool:
        return self.field == ScalarField.REAL

    def scaled(self, c: complex | float) -> "MultilinearForm":
        field = self.field
        if field == ScalarField.REAL and np.iscomplexobj(c) and np.imag(c) != 0:
            field = ScalarField.COMPLEX
        return MultilinearForm(
            coeffs=self.coeffs * c, pspec=self.pspec, field=field, dims=self.dims
        )

    def is_diagonal(self) -> bool:
        """Whether the coefficients vanish off the main diagonal i_1 = ... = i_m"""
        if len(set(self.dims)) != 1:
            return False
        off = self.coeffs.copy()
        n = self.dims[0]
        diag = np.arange(n)
        off[(diag,) * self.m] = 0
        return not np.any(off)

    def diagonal(self) -> np.ndarray:
        if len(set(self.dims)) != 1:
            raise DimensionError(f"diagonal needs equal extents, found {self.dims}")
        diag = np.arange(self.dims[0])
        return self.coeffs[(diag,) * self.m]

    def __repr__(self) -> str:
        return (
            f"MultilinearForm(field={self.field.value}, dims={self.dims}, "
            f"pspec=({self.pspec}))"
        )


def _infer_field(coeffs: np.ndarray) -> ScalarField:
    if np.iscomplexobj(coeffs) and np.any(coeffs.imag != 0):
        return ScalarField.COMPLEX
    return ScalarField.REAL
