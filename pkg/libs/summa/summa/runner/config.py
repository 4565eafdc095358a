from __future__ import annotations

import math
from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator
from theflow.settings import settings as flowsettings

from summa.base import (
    ExponentVector,
    PartitionSpec,
    PSpec,
    ScalarField,
)
from summa.base.schema import Exponent
from summa.exceptions import (
    DimensionError,
    ResourceError,
    UnsupportedError,
)
from summa.extremal import choose_beta
from summa.theory import (
    diagonal_exponent,
    hl_exponent,
    mixed_constant_bound,
    require_hl_range,
)

ExperimentKind = Literal[
    "verify", "ksz-probe", "zalduendo-probe", "constants", "exponent", "sweep"
]
OutputFormat = Literal["csv", "json"]

TENSOR_BUDGET: int = getattr(flowsettings, "SUMMA_TENSOR_BUDGET", 10**8)
KSZ_N_LISTS = {2: [4, 8, 16, 32, 64], 3: [4, 8, 16, 32]}
ZALDUENDO_N_LIST = [10**2, 10**3, 10**4, 10**5, 10**6]
# provenance files carry the producing version next to the config fields
VERSION_KEY = "summa_version"


def balanced_partition(m: int, k: int) -> PartitionSpec:
    """Contiguous blocks whose sizes differ by at most one, larger blocks first"""
    base, extra = divmod(m, k)
    return PartitionSpec.contiguous([base + 1] * extra + [base] * (k - extra))


class ExperimentConfig(BaseModel):
    """Everything needed to reproduce one experiment.

    Fields irrelevant to `kind` are ignored. Exponents accept numbers, "a/b"
    strings and "inf"; `pspec` may be a single exponent, repeated m times.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ExperimentKind
    seed: int = 0
    field: ScalarField = ScalarField.REAL

    m: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    n_list: Optional[list[int]] = None
    pspec: Optional[list[Exponent]] = None
    partition: Optional[list[int]] = None
    q: Optional[list[Exponent]] = None
    s: Optional[Exponent] = None
    beta: Optional[float] = None

    restarts: int = Field(default=getattr(flowsettings, "SUMMA_RESTARTS", 32), ge=1)
    max_iters: int = Field(default=getattr(flowsettings, "SUMMA_MAX_ITERS", 200), ge=1)
    draws: int = Field(default=getattr(flowsettings, "SUMMA_KSZ_DRAWS", 8), ge=1)
    trials: Optional[int] = Field(default=None, ge=1)
    concurrent: bool = getattr(flowsettings, "SUMMA_CONCURRENT", True)

    form: Optional[str] = None
    p_values: Optional[list[Exponent]] = None
    out: Optional[str] = None
    format: OutputFormat = "csv"

    @field_validator("pspec", "q", "p_values", "partition", "n_list", mode="before")
    @classmethod
    def _split(cls, value):
        if isinstance(value, str):
            return [token for token in value.split(",") if token.strip()]
        if value is not None and not isinstance(value, (list, tuple)):
            return [value]
        return value

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> "ExperimentConfig":
        """Load a JSON or YAML config; `overrides` that are not None win.

        Provenance files written next to outputs load as configs too.
        """
        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text()) or {}
        except OSError as e:
            raise OSError(f"cannot read config {path}: {e}") from e
        except yaml.YAMLError as e:
            raise DimensionError(f"{path} is not valid JSON/YAML: {e}") from e
        if not isinstance(data, dict):
            raise DimensionError(f"{path} must hold a mapping of config fields")
        data.pop(VERSION_KEY, None)
        data.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**data)

    # resolved views ------------------------------------------------------

    def require(self, *names: str):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise DimensionError(f"{self.kind} needs {', '.join(missing)}")

    def resolved_pspec(self) -> PSpec:
        self.require("m", "pspec")
        entries = list(self.pspec)
        if len(entries) == 1 and self.m > 1:
            entries = entries * self.m
        if len(entries) != self.m:
            raise DimensionError(
                f"pspec has {len(entries)} exponents, expected m={self.m}"
            )
        return PSpec.parse(entries)

    def resolved_k(self, default: Optional[int] = None) -> int:
        if self.k is not None:
            return self.k
        if self.partition is not None:
            return len(self.partition)
        return self.m if default is None else default

    def resolved_partition(self, default_k: Optional[int] = None) -> PartitionSpec:
        k = self.resolved_k(default_k)
        if self.partition is not None:
            part = PartitionSpec.parse(self.partition)
        else:
            if not 1 <= k <= self.m:
                raise DimensionError(f"need 1 <= k <= m, found k={k}, m={self.m}")
            part = balanced_partition(self.m, k)
        if part.m != self.m or part.k != k:
            raise DimensionError(
                f"partition ({part}) does not split m={self.m} slots into k={k} blocks"
            )
        return part

    def resolved_q(self, k: int, default: Any = None) -> ExponentVector:
        if self.q is not None:
            q = ExponentVector.parse(self.q)
            if q.k == 1 and k > 1:
                q = ExponentVector.uniform(q.entries[0], k)
        elif self.s is not None:
            q = ExponentVector.uniform(self.s, k)
        elif default is not None:
            q = ExponentVector.uniform(default, k)
        else:
            raise DimensionError(f"{self.kind} needs q or s")
        if q.k != k:
            raise DimensionError(f"q has {q.k} exponents, expected k={k}")
        return q

    def resolved_n_list(self) -> list[int]:
        if self.n_list is not None:
            n_list = sorted(set(self.n_list))
        elif self.kind == "zalduendo-probe":
            n_list = ZALDUENDO_N_LIST
        else:
            n_list = [
                n
                for n in KSZ_N_LISTS.get(self.m, [2, 4, 8])
                if n**self.m <= TENSOR_BUDGET
            ]
        if len(n_list) < 3:
            raise DimensionError(f"probes need at least 3 values of N, got {n_list}")
        if any(n < 1 for n in n_list):
            raise DimensionError(f"extents must be >= 1, found {n_list}")
        return n_list

    # hypotheses ------------------------------------------------------------

    def validate_hypotheses(self):
        """Check the hypotheses of the inequality the experiment exercises.

        Raises before any computation; the error names the violated hypothesis.
        """
        if self.kind == "verify":
            self._validate_verify()
        elif self.kind == "ksz-probe":
            self._validate_ksz()
        elif self.kind == "zalduendo-probe":
            self._validate_zalduendo()
        elif self.kind in ("constants", "exponent"):
            if self.m is not None and self.m < 1:
                raise DimensionError(f"m must be >= 1, found {self.m}")
            if self.k is not None and self.m is not None and not 1 <= self.k <= self.m:
                raise DimensionError(f"need 1 <= k <= m, found k={self.k}, m={self.m}")

    def _validate_verify(self):
        if self.form is not None:
            return
        self.require("m", "n", "pspec")
        if self.m < 1 or self.n < 1:
            raise DimensionError(f"m and N must be >= 1, found m={self.m}, N={self.n}")
        pspec = self.resolved_pspec()
        require_hl_range(pspec)
        part = self.resolved_partition()
        size = self.n**self.m
        if size > TENSOR_BUDGET:
            raise ResourceError(
                f"N^m = {size} exceeds the tensor budget of {TENSOR_BUDGET}"
            )
        rho = hl_exponent(part.k, self.m, pspec)
        q = self.resolved_q(part.k, default=rho)
        mixed_constant_bound(part.k, self.m, pspec, q, self.field, part)

    def _validate_ksz(self):
        if self.field != ScalarField.REAL:
            raise UnsupportedError(
                "random sign forms are real; complex (Steinhaus) forms are not sampled"
            )
        self.require("m", "pspec")
        self.resolved_pspec()
        part = self.resolved_partition()
        self.resolved_q(part.k)
        self.resolved_n_list()

    def _validate_zalduendo(self):
        self.require("m", "pspec")
        pspec = self.resolved_pspec()
        diagonal_exponent(pspec)
        part = self.resolved_partition(default_k=1)
        q = self.resolved_q(part.k)
        if self.beta is None:
            choose_beta(q.entries[0], pspec)
        elif not math.isfinite(self.beta):
            raise DimensionError(f"beta must be finite, found {self.beta}")
        self.resolved_n_list()

