from __future__ import annotations

import logging
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict

from summa.base import PSpec, Regime, ScalarField, exponent_str
from summa.exceptions import DimensionError
from summa.theory import (
    classify,
    constant_bounds,
    hl_exponent,
    ksz_norm_exponent,
    lambda_zero,
    optimality_lower_bounds,
)

from .config import ExperimentConfig

logger = logging.getLogger(__name__)

DEFAULT_MAX_M = 6


class TableRow(BaseModel):
    """One (k, m, p) configuration of the exponent/constant tables.

    Exponents are exact and rendered as "a/b" strings; `rho_value` repeats rho
    as a float. Rows outside the Hardy-Littlewood range carry only the regime.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    m: int
    p: str
    field: ScalarField
    regime: Regime
    inv_sum: str
    rho: Optional[str] = None
    rho_value: Optional[float] = None
    constant: Optional[float] = None
    formula_id: Optional[str] = None
    bounds: dict[str, float] = {}
    lambda_0: Optional[str] = None
    lower_ksz: Optional[str] = None
    lower_diag: Optional[str] = None
    lower_s: Optional[str] = None
    ksz_exponent: Optional[str] = None

    def flat(self) -> dict:
        """Columns for CSV output, with one `C[formula_id]` column per bound"""
        row = self.model_dump(mode="json", exclude={"bounds"})
        for formula_id, value in self.bounds.items():
            row[f"C[{formula_id}]"] = value
        return row


def _pspecs(config: ExperimentConfig, m: int) -> Iterator[PSpec]:
    if config.pspec is not None:
        yield config.resolved_pspec()
        return
    for p in config.p_values or ["inf"]:
        yield PSpec.uniform(p, m)


def table_row(
    kind: str, k: int, m: int, pspec: PSpec, field: ScalarField
) -> TableRow:
    classification = classify(pspec)
    row = dict(
        k=k,
        m=m,
        p=str(pspec) if not pspec.is_uniform() else exponent_str(pspec.entries[0]),
        field=field,
        regime=classification.regime,
        inv_sum=str(classification.inv_sum),
    )
    if classification.regime == Regime.OUT_OF_SCOPE:
        return TableRow(**row)

    rho = hl_exponent(k, m, pspec)
    row.update(rho=str(rho), rho_value=float(rho))
    if kind == "constants":
        bounds = constant_bounds(k, m, pspec, field)
        best = min(bounds, key=lambda bound: bound.value)
        row.update(
            constant=best.value,
            formula_id=best.formula_id,
            bounds={bound.formula_id: bound.value for bound in bounds},
        )
    else:
        row.update(ksz_exponent=str(ksz_norm_exponent(m, pspec)))
        if classification.regime == Regime.SUBCRITICAL_HL or (
            classification.inv_sum * 2 == 1
        ):
            lower = optimality_lower_bounds(k, m, pspec)
            row.update(
                lambda_0=str(lambda_zero(k, classification.inv_sum)),
                lower_ksz=str(lower.rho_ksz),
                lower_diag=str(lower.rho_diag),
                lower_s=str(lower.s),
            )
    return TableRow(**row)


def run_tables(config: ExperimentConfig) -> list[TableRow]:
    """Rows for every k <= m (restricted to config.k / config.m when given)
    and every exponent in `p_values` (or the single `pspec`)
    """
    if config.kind not in ("constants", "exponent"):
        raise DimensionError(f"{config.kind} is not a table experiment")
    config.validate_hypotheses()
    m_values = [config.m] if config.m is not None else range(1, DEFAULT_MAX_M + 1)

    rows = []
    for m in m_values:
        k_values = [config.k] if config.k is not None else range(1, m + 1)
        for pspec in _pspecs(config, m):
            for k in k_values:
                rows.append(table_row(config.kind, k, m, pspec, config.field))
    logger.info(f"{config.kind} table: {len(rows)} rows")
    return rows
