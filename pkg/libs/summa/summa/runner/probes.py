from __future__ import annotations

import logging

from summa.base import ProbeResult
from summa.exceptions import DimensionError
from summa.extremal import (
    KSZFamily,
    KSZSampler,
    ZalduendoFamily,
    choose_beta,
    ratio_probe,
)
from summa.norms import NormEstimator

from .config import ExperimentConfig

logger = logging.getLogger(__name__)


def run_probe(config: ExperimentConfig) -> ProbeResult:
    """Run a ksz-probe or zalduendo-probe experiment"""
    config.validate_hypotheses()
    pspec = config.resolved_pspec()
    n_list = config.resolved_n_list()
    estimator = NormEstimator(
        restarts=config.restarts,
        max_iters=config.max_iters,
        seed=config.seed,
        concurrent=config.concurrent,
    )

    if config.kind == "ksz-probe":
        part = config.resolved_partition()
        q = config.resolved_q(part.k)
        family = KSZFamily(
            m=config.m,
            pspec=pspec,
            sampler=KSZSampler(
                draws=config.draws,
                seed=config.seed,
                selection="median",
                estimator=estimator,
            ),
        )
    elif config.kind == "zalduendo-probe":
        part = config.resolved_partition(default_k=1)
        q = config.resolved_q(part.k)
        beta = config.beta
        if beta is None:
            beta = choose_beta(q.entries[0], pspec)
            logger.info(f"Chose beta = {beta} for s = {q.entries[0]}")
        family = ZalduendoFamily(
            m=config.m, pspec=pspec, beta=beta, estimator=estimator
        )
    else:
        raise DimensionError(f"{config.kind} is not a probe experiment")

    result = ratio_probe(
        family, part, q, n_list, concurrent=config.concurrent
    )
    logger.info(
        f"{result.family} probe at s={result.exponent_s}: slope {result.slope} "
        f"+- {result.slope_stderr}, verdict {result.verdict.value}"
    )
    return result
