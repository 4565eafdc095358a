from __future__ import annotations

import logging
from typing import Optional

from summa.base import VerificationRecord

from .config import ExperimentConfig
from .verify import VIOLATION, run_verify

logger = logging.getLogger(__name__)

# (field, m, k or partition, N, pspec); ten trials each
DEFAULT_SUITE = [
    # subcritical, p = inf
    dict(field="real", m=2, k=2, n=4, pspec="inf"),
    dict(field="complex", m=2, k=2, n=3, pspec="inf"),
    dict(field="real", m=3, partition="2,1", n=3, pspec="inf"),
    dict(field="real", m=3, k=1, n=4, pspec="inf"),
    # subcritical, finite and mixed exponents
    dict(field="real", m=2, k=2, n=4, pspec="8"),
    dict(field="complex", m=3, k=3, n=3, pspec="8,inf,inf"),
    # |1/p| = 1/2
    dict(field="real", m=2, k=2, n=4, pspec="4"),
    # critical band
    dict(field="complex", m=2, k=1, n=4, pspec="3"),
    dict(field="real", m=3, k=3, n=3, pspec="4"),
    dict(field="real", m=3, partition="1,2", n=3, pspec="4"),
]


def default_suite(
    seed: int = 0, trials: int = 10, **overrides
) -> list[ExperimentConfig]:
    return [
        ExperimentConfig(kind="verify", seed=seed, trials=trials, **params, **overrides)
        for params in DEFAULT_SUITE
    ]


def run_sweep(
    config: ExperimentConfig, suite: Optional[list[ExperimentConfig]] = None
) -> list[VerificationRecord]:
    """Run every verify config of the suite; records are ordered by
    (config index, trial index)
    """
    if suite is None:
        suite = default_suite(
            seed=config.seed,
            trials=config.trials or 10,
            restarts=config.restarts,
            max_iters=config.max_iters,
            concurrent=config.concurrent,
        )

    records: list[VerificationRecord] = []
    for index, item in enumerate(suite):
        records.extend(run_verify(item, config_index=index))
    violations = sum(record.status == VIOLATION for record in records)
    logger.info(f"Sweep: {len(records)} records over {len(suite)} configs, "
                f"{violations} violations")
    return records
