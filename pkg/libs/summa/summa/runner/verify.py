from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np
from theflow.settings import settings as flowsettings

from summa.base import (
    BaseComponent,
    ExponentVector,
    PartitionSpec,
    VerificationRecord,
)
from summa.exceptions import DimensionError
from summa.extremal import lhs_for_family
from summa.forms import MultilinearForm, gaussian_form, hadamard_form, load_form
from summa.norms import NormEstimator
from summa.theory import hl_exponent, mixed_constant_bound, require_hl_range

from .config import ExperimentConfig, balanced_partition

logger = logging.getLogger(__name__)

BUILTIN_FORMS = {"hadamard": hadamard_form}

HOLDS = "holds"
VIOLATION = "violation"
INCONCLUSIVE = "inconclusive"


def resolve_form(name: str) -> MultilinearForm:
    """A built-in fixture by name, otherwise a JSON form file"""
    if name in BUILTIN_FORMS:
        return BUILTIN_FORMS[name]()
    return load_form(Path(name))


class Verifier(BaseComponent):
    """Check LHS <= C * ||T|| on random or fixture forms.

    The left-hand side is the mixed q-norm of the k-block coefficients, with q
    the optimal flat exponent unless the config gives one. The constant is the
    smallest applicable estimate. Records whose norm is only a lower bound get
    no slack, and a failure there is inconclusive rather than a violation.
    """

    config: ExperimentConfig
    config_index: int = 0
    holds_tol: float = getattr(flowsettings, "SUMMA_HOLDS_TOL", 1e-9)
    estimator: Optional[NormEstimator] = None

    def run(self) -> list[VerificationRecord]:
        config = self.config
        config.validate_hypotheses()
        estimator = self.estimator or NormEstimator(
            restarts=config.restarts,
            max_iters=config.max_iters,
            seed=config.seed,
            concurrent=config.concurrent,
        )

        if config.form is not None:
            form = resolve_form(config.form)
            form_id = Path(config.form).stem
            return [self.check(form, form_id, estimator)]

        pspec = config.resolved_pspec()
        dims = (config.n,) * config.m

        def trial(t: int) -> VerificationRecord:
            rng = np.random.default_rng([config.seed, self.config_index, t])
            form = gaussian_form(dims, pspec, rng, field=config.field)
            return self.check(form, f"c{self.config_index}-t{t}", estimator)

        n_trials = config.trials or 1
        trials = range(n_trials)
        if config.concurrent and n_trials > 1:
            with ThreadPoolExecutor() as executor:
                futures = [executor.submit(trial, t) for t in trials]
                records = [future.result() for future in futures]
        else:
            records = [trial(t) for t in trials]

        violations = sum(record.status == VIOLATION for record in records)
        logger.info(
            f"Config {self.config_index}: {len(records)} records, "
            f"{violations} violations"
        )
        return records

    def partition_for(self, form: MultilinearForm) -> PartitionSpec:
        config = self.config
        if config.partition is not None:
            part = PartitionSpec.parse(config.partition)
        else:
            k = config.k if config.k is not None else form.m
            if not 1 <= k <= form.m:
                raise DimensionError(f"need 1 <= k <= m, found k={k}, m={form.m}")
            part = balanced_partition(form.m, k)
        if part.m != form.m:
            raise DimensionError(
                f"partition ({part}) covers {part.m} slots, the form has {form.m}"
            )
        return part

    def exponent_for(self, form: MultilinearForm, part: PartitionSpec) -> ExponentVector:
        config = self.config
        rho = hl_exponent(part.k, form.m, form.pspec)
        if config.q is None and config.s is None:
            return ExponentVector.uniform(rho, part.k)
        if config.q is not None:
            q = ExponentVector.parse(config.q)
        else:
            q = ExponentVector.parse([config.s])
        if q.k == 1 and part.k > 1:
            q = ExponentVector.uniform(q.entries[0], part.k)
        return q

    def check(
        self, form: MultilinearForm, form_id: str, estimator: NormEstimator
    ) -> VerificationRecord:
        require_hl_range(form.pspec)
        part = self.partition_for(form)
        q = self.exponent_for(form, part)
        bound = mixed_constant_bound(part.k, form.m, form.pspec, q, form.field, part)

        lhs = lhs_for_family(form, part, q)
        norm = estimator(form)
        if norm.value > 0:
            ratio = lhs / norm.value
        else:
            ratio = 0.0 if lhs == 0 else math.inf

        tol = self.holds_tol if norm.certified else 0.0
        holds = ratio <= bound.value + tol
        if holds:
            status = HOLDS
        elif norm.certified:
            status = VIOLATION
            logger.error(
                f"{form_id}: ratio {ratio} exceeds the constant {bound.value} "
                f"[{bound.formula_id}] with a certified norm"
            )
        else:
            status = INCONCLUSIVE
            logger.warning(
                f"{form_id}: ratio {ratio} exceeds {bound.value} but the norm "
                f"{norm.value} is only a lower bound"
            )

        return VerificationRecord(
            form_id=form_id,
            field=form.field,
            m=form.m,
            k=part.k,
            dims=form.dims,
            pspec=str(form.pspec),
            partition=str(part),
            q=str(q),
            lhs=lhs,
            norm=norm,
            constant_bound=bound,
            ratio=ratio,
            holds=holds,
            status=status,
            tol=tol,
        )


def run_verify(
    config: ExperimentConfig, config_index: int = 0, **params
) -> list[VerificationRecord]:
    return Verifier(config=config, config_index=config_index, **params)()
