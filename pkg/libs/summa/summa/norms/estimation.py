from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Optional

import numpy as np
from theflow.settings import settings as flowsettings

from summa.base import (
    BaseComponent,
    NormEstimate,
    NormMethod,
    conjugate,
    is_inf,
    to_exponent,
)
from summa.exceptions import (
    DimensionError,
    NumericalError,
    ResourceError,
    UnsupportedError,
)
from summa.forms import MultilinearForm, contract_except, evaluate

from .diagonal import diagonal_closed_form, phase
from .mixed import lp_norm

logger = logging.getLogger(__name__)

# sign patterns handled per vectorised chunk of the exact enumeration
ENUM_CHUNK = 2**12


def maximize_slot(c: Any, p: Any) -> tuple[np.ndarray, float]:
    """Maximise |sum_i c_i x_i| over the unit ball of l_p.

    Returns the maximiser and the optimum, which is the dual norm ||c||_{p*}.
    The maximiser aligns with the conjugate phase of c, so sum_i c_i x_i is
    real and nonnegative. A zero vector gives (e_1, 0); for p = 1 the lowest
    index of largest modulus wins.
    """
    p = to_exponent(p)
    if p < 1:
        raise DimensionError(f"exponent must be >= 1, found {p}")
    c = np.asarray(c)
    if c.ndim != 1 or c.size == 0:
        raise DimensionError("coefficient vector must be a non-empty 1-d array")

    magnitude = np.abs(c)
    dtype = complex if np.iscomplexobj(c) else float
    if not np.any(magnitude):
        x = np.zeros(c.size, dtype=dtype)
        x[0] = 1
        return x, 0.0

    unit = phase(c)
    if is_inf(p):
        return unit.astype(dtype), float(np.sum(magnitude))
    if p == 1:
        j = int(np.argmax(magnitude))
        x = np.zeros(c.size, dtype=dtype)
        x[j] = unit[j]
        return x, float(magnitude[j])

    q = float(conjugate(p))
    optimum = lp_norm(magnitude, q)
    x = unit * (magnitude / optimum) ** (q - 1)
    return x.astype(dtype), optimum


def random_start(
    rng: np.random.Generator, n: int, p: Any, complex_field: bool
) -> np.ndarray:
    """A random point on the unit sphere of l_p^n.

    Gaussian directions rescaled to norm one; for p = inf uniform entries in
    [-1, 1] (uniform moduli with random phases when complex) scaled to sup 1.
    """
    if is_inf(p):
        x = rng.uniform(-1.0, 1.0, n)
        if complex_field:
            x = np.abs(x) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
        scale = np.max(np.abs(x))
    else:
        x = rng.standard_normal(n)
        if complex_field:
            x = x + 1j * rng.standard_normal(n)
        scale = lp_norm(x, p)
    return x / scale if scale > 0 else np.eye(1, n, 0).reshape(-1)


class NormEstimator(BaseComponent):
    """Estimate the operator norm sup |T(x_1, ..., x_m)| over the unit balls.

    Three methods, tried in order:
        - diagonal-closed-form: diagonal forms with |1/p| < 1, exact
        - exact-sign-enum: real forms with every p_j = inf, enumerating the
    sign vectors of all slots but the last while the pattern count fits
    `enum_budget`, exact
        - alternating-ascent: best of `restarts` local searches that maximise
    one slot at a time, a lower bound

    Exact methods are skipped when `allow_exact` is off. `force_exact` raises
    instead of falling back to the ascent.

    Args:
        restarts: number of independent ascent starts
        max_iters: maximum sweeps per start
        tol: stop a start when a sweep improves the objective by less than
            this (relative)
        seed: base seed; start r draws from `default_rng([seed, r])`
        concurrent: run starts in a thread pool
    """

    restarts: int = getattr(flowsettings, "SUMMA_RESTARTS", 32)
    max_iters: int = getattr(flowsettings, "SUMMA_MAX_ITERS", 200)
    tol: float = getattr(flowsettings, "SUMMA_TOL", 1e-12)
    seed: int = 0
    allow_exact: bool = True
    force_exact: bool = False
    enum_budget: int = getattr(flowsettings, "SUMMA_ENUM_BUDGET", 2**22)
    concurrent: bool = getattr(flowsettings, "SUMMA_CONCURRENT", True)

    def run(self, form: MultilinearForm) -> NormEstimate:
        if self.restarts < 1:
            raise DimensionError(f"restarts must be >= 1, found {self.restarts}")

        if self.allow_exact or self.force_exact:
            if form.is_diagonal() and form.pspec.inv_sum < 1:
                return diagonal_closed_form(form)
            if form.is_real and form.pspec.all_infinite():
                patterns = self.sign_patterns(form)
                if patterns <= self.enum_budget:
                    return self.exact_sign_enum(form)
                if self.force_exact:
                    raise ResourceError(
                        f"{patterns} sign patterns exceed the enumeration budget "
                        f"of {self.enum_budget}"
                    )
                logger.info(
                    f"{patterns} sign patterns over budget, falling back to ascent"
                )
            elif self.force_exact:
                raise UnsupportedError(
                    f"no exact method for {form!r}: needs a diagonal form or a "
                    "real form on l_inf spaces"
                )

        return self.alternating_ascent(form)

    @staticmethod
    def sign_patterns(form: MultilinearForm) -> int:
        return 2 ** sum(form.dims[:-1])

    def exact_sign_enum(self, form: MultilinearForm) -> NormEstimate:
        """max over sign vectors x_1, ..., x_{m-1} of ||T(x_1, ..., x_{m-1}, .)||_1"""
        dims = form.dims
        bits = sum(dims[:-1])
        total = 2**bits
        logger.debug(f"Enumerating {total} sign patterns for {form!r}")

        best_value, best_index = -1.0, 0
        offsets = np.cumsum((0,) + dims[:-1])
        shifts = np.arange(bits, dtype=np.int64)
        for start in range(0, total, ENUM_CHUNK):
            index = np.arange(start, min(start + ENUM_CHUNK, total), dtype=np.int64)
            signs = 1.0 - 2.0 * ((index[:, None] >> shifts) & 1)
            values = np.broadcast_to(form.coeffs, (len(index),) + dims)
            for slot in range(form.m - 1):
                block = signs[:, offsets[slot] : offsets[slot + 1]]
                values = np.einsum("cd,cd...->c...", block, values)
            norms = np.sum(np.abs(values), axis=-1)
            j = int(np.argmax(norms))
            if norms[j] > best_value:
                best_value, best_index = float(norms[j]), int(index[j])

        pattern = 1.0 - 2.0 * ((best_index >> np.arange(bits)) & 1)
        witness = [
            pattern[offsets[slot] : offsets[slot + 1]] for slot in range(form.m - 1)
        ]
        last = contract_except(form.coeffs, witness + [None], form.m - 1)
        x_last, _ = maximize_slot(last, form.pspec.entries[-1])
        witness.append(x_last)
        return NormEstimate(
            value=best_value,
            method=NormMethod.EXACT_SIGN_ENUM,
            certified=True,
            iterations=total,
            witness=tuple(witness),
        )

    def _ascend(self, form: MultilinearForm, restart: int):
        rng = np.random.default_rng([self.seed, restart])
        complex_field = not form.is_real
        xs = [
            random_start(rng, n, p, complex_field)
            for n, p in zip(form.dims, form.pspec.entries)
        ]
        objective = abs(evaluate(form, xs))
        sweeps = 0
        for sweeps in range(1, self.max_iters + 1):
            previous = objective
            for slot, p in enumerate(form.pspec.entries):
                c = contract_except(form.coeffs, xs, slot)
                xs[slot], objective = maximize_slot(c, p)
            slack = 1e-12 * max(previous, 1e-300)
            if objective < previous - slack:
                raise NumericalError(
                    f"ascent decreased the objective from {previous} to {objective}"
                )
            if objective - previous <= self.tol * max(objective, 1e-300):
                break
        return abs(evaluate(form, xs)), sweeps, xs

    def alternating_ascent(self, form: MultilinearForm) -> NormEstimate:
        restarts = range(self.restarts)
        if self.concurrent and self.restarts > 1:
            with ThreadPoolExecutor() as executor:
                futures = [
                    executor.submit(self._ascend, form, restart) for restart in restarts
                ]
                results = [future.result() for future in futures]
        else:
            results = [self._ascend(form, restart) for restart in restarts]

        # ties keep the lowest restart index
        best = max(range(len(results)), key=lambda r: (results[r][0], -r))
        value, _, witness = results[best]
        iterations = sum(sweeps for _, sweeps, _ in results)
        logger.debug(
            f"Ascent on {form!r}: {value} after {len(results)} restarts "
            f"(best restart {best})"
        )
        return NormEstimate(
            value=value,
            method=NormMethod.ALTERNATING_ASCENT,
            certified=False,
            restarts_used=len(results),
            iterations=iterations,
            witness=tuple(witness),
        )


def estimate_norm(
    form: MultilinearForm, config: Optional[dict[str, Any]] = None, **kwargs
) -> NormEstimate:
    """Functional entry point: `estimate_norm(form, {"restarts": 8, "seed": 1})`"""
    params = dict(config or {})
    params.update(kwargs)
    return NormEstimator(**params)(form)


def dual_norm(c: Any, p: Any) -> float:
    """||c||_{p*}, the optimum of `maximize_slot`"""
    return lp_norm(c, conjugate(to_exponent(p)))
