from __future__ import annotations

import logging
import math
from typing import Any, Optional, Sequence

import numpy as np
from theflow.settings import settings as flowsettings

from summa.base import BaseComponent, Node, NormEstimate, PSpec, ScalarField
from summa.exceptions import DimensionError, UnsupportedError
from summa.forms import MultilinearForm, sign_form
from summa.norms import NormEstimator

logger = logging.getLogger(__name__)


class KSZSampler(BaseComponent):
    """Random +-1 forms with small norm.

    Draws `draws` independent sign tensors and estimates each norm. With
    `selection="min"` the draw with the smallest estimate is kept; with
    `selection="median"` the lower median draw is kept, a typical sample of
    the random construction rather than its best case. Ties go to the earlier
    draw. Draw d of a given shape uses `default_rng([seed, *dims, d])`.
    """

    draws: int = getattr(flowsettings, "SUMMA_KSZ_DRAWS", 8)
    selection: str = getattr(flowsettings, "SUMMA_KSZ_SELECTION", "min")
    seed: int = 0
    field: ScalarField = ScalarField.REAL
    estimator: NormEstimator = Node(default_callback=lambda _: NormEstimator())

    def run(
        self, dims: Sequence[int], pspec: Any
    ) -> tuple[MultilinearForm, NormEstimate]:
        if ScalarField(self.field) != ScalarField.REAL:
            raise UnsupportedError("random sign forms are only sampled over the reals")
        if self.draws < 1:
            raise DimensionError(f"draws must be >= 1, found {self.draws}")
        dims = tuple(int(n) for n in dims)
        pspec = PSpec.parse(pspec)

        if self.selection not in ("min", "median"):
            raise DimensionError(f"unknown draw selection {self.selection!r}")

        samples: list[tuple[MultilinearForm, NormEstimate]] = []
        for draw in range(self.draws):
            rng = np.random.default_rng([self.seed, *dims, draw])
            form = sign_form(dims, pspec, rng)
            samples.append((form, self.estimator(form)))

        order = sorted(range(len(samples)), key=lambda d: (samples[d][1].value, d))
        pick = 0 if self.selection == "min" else (len(order) - 1) // 2
        form, estimate = samples[order[pick]]
        if pspec.all_infinite():
            floor = math.sqrt(math.prod(dims))
            if estimate.value < floor:
                logger.warning(
                    f"Sign form {form!r} has norm {estimate.value} below the "
                    f"expected floor {floor}"
                )
        logger.info(
            f"KSZ dims={dims}: {self.selection} of {self.draws} draws has norm "
            f"{estimate.value} ({estimate.method.value})"
        )
        return form, estimate


def ksz_form(
    m: int,
    dims: int | Sequence[int],
    pspec: Any,
    seed: int = 0,
    draws: int = 8,
    selection: str = "min",
    field: ScalarField | str = ScalarField.REAL,
    estimator: Optional[NormEstimator] = None,
) -> tuple[MultilinearForm, NormEstimate]:
    if isinstance(dims, int):
        dims = (dims,) * m
    if len(dims) != m:
        raise DimensionError(f"expected {m} extents, got {len(dims)}")
    params: dict[str, Any] = dict(
        draws=draws, seed=seed, selection=selection, field=ScalarField(field)
    )
    if estimator is not None:
        params["estimator"] = estimator
    return KSZSampler(**params)(dims, pspec)
