from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Iterable, Optional, Sequence

import numpy as np
from pydantic import (
    BaseModel,
    ValidationError,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from summa.exceptions import DimensionError

INF = math.inf
_INF_TOKENS = {"inf", "+inf", "infinity", "∞", "oo"}
# floats are snapped to a nearby fraction with a small denominator when the
# fraction reproduces them to this relative precision
_SNAP_DENOMINATOR = 10**6
_SNAP_RTOL = 1e-15


def to_exponent(value: Any) -> Fraction | float:
    """Convert user input into an extended-real exponent.

    Finite values become `Fraction`, infinity becomes `INF`. Accepted inputs are
    `Fraction`, `int`, `float`, and strings such as "4/3", "1.5", "inf" or "∞".
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DimensionError(f"Invalid exponent {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            raise DimensionError("Exponent cannot be NaN")
        if math.isinf(value):
            if value < 0:
                raise DimensionError("Exponent cannot be -inf")
            return INF
        snapped = Fraction(value).limit_denominator(_SNAP_DENOMINATOR)
        if value == 0 or abs(float(snapped) - value) <= _SNAP_RTOL * abs(value):
            return snapped
        return Fraction(value)
    if isinstance(value, str):
        token = value.strip().lower()
        if token in _INF_TOKENS:
            return INF
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as e:
            raise DimensionError(f"Invalid exponent {value!r}") from e
    raise DimensionError(f"Invalid exponent type {type(value)}")


def is_inf(p: Fraction | float) -> bool:
    return not isinstance(p, Fraction) and math.isinf(p)


def reciprocal(p: Fraction | float) -> Fraction:
    """1/p with 1/inf = 0 exactly"""
    if is_inf(p):
        return Fraction(0)
    return 1 / Fraction(p)


def from_reciprocal(r: Fraction) -> Fraction | float:
    """Inverse of `reciprocal`: 0 maps back to INF"""
    if r == 0:
        return INF
    return 1 / Fraction(r)


def conjugate(p: Fraction | float) -> Fraction | float:
    """The exponent p* with 1/p + 1/p* = 1"""
    return from_reciprocal(1 - reciprocal(p))


def as_float(p: Fraction | float) -> float:
    return float(p)


def exponent_str(p: Fraction | float) -> str:
    return "inf" if is_inf(p) else str(p)


def exponent_json(p: Fraction | float) -> int | str:
    if is_inf(p):
        return "inf"
    if p.denominator == 1:
        return int(p)
    return str(p)


Exponent = Annotated[
    Any,
    BeforeValidator(to_exponent),
    PlainSerializer(exponent_json, return_type=Any),
]


def _check_exponents(entries: Sequence[Fraction | float], what: str):
    if len(entries) == 0:
        raise DimensionError(f"{what} must have at least one entry")
    for p in entries:
        if p < 1:
            raise DimensionError(f"{what} entries must be >= 1, found {p}")


def _parse_list(value: Any) -> Any:
    if isinstance(value, str):
        return [token for token in value.replace(";", ",").split(",") if token.strip()]
    if isinstance(value, (int, float, Fraction, np.number)):
        return [value]
    return value


class ScalarField(str, Enum):
    """The scalar field K of the forms"""

    REAL = "real"
    COMPLEX = "complex"


class Regime(str, Enum):
    SUBCRITICAL_HL = "subcritical-hl"  # |1/p| < 1/2
    CRITICAL_BAND = "critical-band"  # 1/2 <= |1/p| < 1
    OUT_OF_SCOPE = "out-of-scope"  # |1/p| >= 1


class NormMethod(str, Enum):
    EXACT_SIGN_ENUM = "exact-sign-enum"
    ALTERNATING_ASCENT = "alternating-ascent"
    DIAGONAL_CLOSED_FORM = "diagonal-closed-form"


EXACT_METHODS = {NormMethod.EXACT_SIGN_ENUM, NormMethod.DIAGONAL_CLOSED_FORM}


class Verdict(str, Enum):
    GROWS = "grows"
    BOUNDED = "bounded"
    INCONCLUSIVE = "inconclusive"


class PSpec(BaseModel):
    """Exponents (p_1, ..., p_m) of the spaces l_{p_j}^N a form acts on.

    Attributes:
        entries: extended-real exponents in [1, inf]
    """

    model_config = ConfigDict(frozen=True)

    entries: tuple[Exponent, ...]

    @field_validator("entries", mode="before")
    @classmethod
    def _split(cls, value):
        return _parse_list(value)

    @field_validator("entries")
    @classmethod
    def _check(cls, value):
        _check_exponents(value, "pspec")
        return value

    @classmethod
    def parse(cls, value: Any) -> "PSpec":
        if isinstance(value, PSpec):
            return value
        try:
            return cls(entries=value)
        except ValidationError as e:
            raise DimensionError(f"invalid pspec {value!r}: {e}") from e

    @classmethod
    def uniform(cls, p: Any, m: int) -> "PSpec":
        return cls(entries=[to_exponent(p)] * m)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def inv_sum(self) -> Fraction:
        """|1/p| = 1/p_1 + ... + 1/p_m, recomputed on every access"""
        return sum((reciprocal(p) for p in self.entries), Fraction(0))

    def conjugates(self) -> tuple[Fraction | float, ...]:
        return tuple(conjugate(p) for p in self.entries)

    def is_uniform(self) -> bool:
        return len(set(self.entries)) == 1

    def all_infinite(self) -> bool:
        return all(is_inf(p) for p in self.entries)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(as_float(p) for p in self.entries)

    def __str__(self) -> str:
        return ",".join(exponent_str(p) for p in self.entries)


class PartitionSpec(BaseModel):
    """Assignment of the m slots of a form into k blocks I_1, ..., I_k.

    `assignment[s]` is the 1-based block label of slot `s`. Blocks need not be
    contiguous; the contiguous convention is provided by `contiguous`.
    """

    model_config = ConfigDict(frozen=True)

    assignment: tuple[int, ...]

    @field_validator("assignment")
    @classmethod
    def _check(cls, value):
        if len(value) == 0:
            raise DimensionError("partition must cover at least one slot")
        labels = set(value)
        k = max(value)
        if min(value) < 1 or labels != set(range(1, k + 1)):
            raise DimensionError(
                f"block labels must be exactly 1..k with no gaps, found {value}"
            )
        return value

    @classmethod
    def contiguous(cls, multiplicities: Iterable[int]) -> "PartitionSpec":
        multiplicities = list(multiplicities)
        if any(n < 1 for n in multiplicities):
            raise DimensionError(
                f"block multiplicities must be >= 1, found {multiplicities}"
            )
        assignment: list[int] = []
        for label, n in enumerate(multiplicities, start=1):
            assignment.extend([label] * n)
        return cls(assignment=assignment)

    @classmethod
    def identity(cls, m: int) -> "PartitionSpec":
        return cls(assignment=list(range(1, m + 1)))

    @classmethod
    def single_block(cls, m: int) -> "PartitionSpec":
        return cls(assignment=[1] * m)

    @classmethod
    def parse(cls, value: Any, m: Optional[int] = None) -> "PartitionSpec":
        """Build from multiplicities ("2,1" or [2, 1]) or from an existing spec"""
        if isinstance(value, PartitionSpec):
            return value
        if value is None:
            if m is None:
                raise DimensionError("partition or m must be given")
            return cls.identity(m)
        try:
            multiplicities = [int(n) for n in _parse_list(value)]
            return cls.contiguous(multiplicities)
        except (ValueError, TypeError) as e:
            raise DimensionError(f"invalid partition {value!r}: {e}") from e

    @property
    def m(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return max(self.assignment)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.assignment.count(label) for label in range(1, self.k + 1))

    @property
    def index_sets(self) -> tuple[tuple[int, ...], ...]:
        """0-based slot indices of each block"""
        return tuple(
            tuple(s for s, label in enumerate(self.assignment) if label == block)
            for block in range(1, self.k + 1)
        )

    def is_contiguous(self) -> bool:
        return list(self.assignment) == sorted(self.assignment)

    def __str__(self) -> str:
        if self.is_contiguous():
            return ",".join(str(n) for n in self.multiplicities)
        return "labels:" + ",".join(str(label) for label in self.assignment)


class ExponentVector(BaseModel):
    """A mixed exponent q = (q_1, ..., q_k), q_1 for the outermost sum"""

    model_config = ConfigDict(frozen=True)

    entries: tuple[Exponent, ...]

    @field_validator("entries", mode="before")
    @classmethod
    def _split(cls, value):
        return _parse_list(value)

    @field_validator("entries")
    @classmethod
    def _check(cls, value):
        _check_exponents(value, "exponent vector")
        return value

    @classmethod
    def parse(cls, value: Any) -> "ExponentVector":
        if isinstance(value, ExponentVector):
            return value
        try:
            return cls(entries=value)
        except ValidationError as e:
            raise DimensionError(f"invalid exponent vector {value!r}: {e}") from e

    @classmethod
    def uniform(cls, q: Any, k: int) -> "ExponentVector":
        return cls(entries=[to_exponent(q)] * k)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def reciprocal_sum(self) -> Fraction:
        return sum((reciprocal(q) for q in self.entries), Fraction(0))

    def is_uniform(self) -> bool:
        return len(set(self.entries)) == 1

    def as_floats(self) -> tuple[float, ...]:
        return tuple(as_float(q) for q in self.entries)

    def __str__(self) -> str:
        return ",".join(exponent_str(q) for q in self.entries)


class RegimeClassification(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    regime: Regime
    inv_sum: Fraction

    @model_validator(mode="after")
    def _consistent(self):
        if self.inv_sum < Fraction(1, 2):
            expected = Regime.SUBCRITICAL_HL
        elif self.inv_sum < 1:
            expected = Regime.CRITICAL_BAND
        else:
            expected = Regime.OUT_OF_SCOPE
        if self.regime != expected:
            raise DimensionError(
                f"regime {self.regime.value} inconsistent with |1/p| = {self.inv_sum}"
            )
        return self

    @field_validator("inv_sum", mode="before")
    @classmethod
    def _fraction(cls, value):
        return Fraction(value)


class NormEstimate(BaseModel):
    """Operator norm sup |T(x_1, ..., x_m)| over the unit balls.

    `value` is exact when `certified`, otherwise it is a lower bound produced by
    a local search. `witness` holds the arguments attaining `value`.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float = Field(ge=0)
    method: NormMethod
    certified: bool
    restarts_used: int = 0
    iterations: int = 0
    witness: tuple[np.ndarray, ...] = Field(default=(), exclude=True, repr=False)

    @model_validator(mode="after")
    def _certification(self):
        if self.certified and self.method not in EXACT_METHODS:
            raise DimensionError(
                f"{self.method.value} estimates are lower bounds, not certified"
            )
        return self


class ConstantBound(BaseModel):
    """An upper estimate for an optimal inequality constant"""

    model_config = ConfigDict(frozen=True)

    value: float
    formula_id: str
    field: ScalarField

    @field_validator("value")
    @classmethod
    def _at_least_one(cls, value):
        if not value >= 1 - 1e-12:
            raise DimensionError(f"inequality constants are >= 1, found {value}")
        return value


class ProbePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    lhs: float
    norm: float
    certified: bool
    ratio: float


class DivergenceReport(BaseModel):
    """Analytic view of a diagonal family as N grows.

    Attributes:
        partial_sum_growth: S(N_last) / S(N_first) with S(N) = sum_j |c_j|^s
        norm_limit: limit of the norm as N -> inf (inf when the series diverges)
        lhs_limit: limit of the left-hand side as N -> inf
        dominated: s >= rho, so the left-hand side never exceeds the norm
    """

    model_config = ConfigDict(frozen=True)

    partial_sum_growth: float
    norm_limit: float
    lhs_limit: float
    dominated: bool = False


class ProbeResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    exponent_s: float
    points: tuple[ProbePoint, ...]
    slope: float
    intercept: float
    slope_stderr: float
    verdict: Verdict
    growth_threshold: float
    theory_slope: Optional[float] = None
    expected: Optional[Verdict] = None
    divergence: Optional[DivergenceReport] = None

    @field_validator("points")
    @classmethod
    def _sorted(cls, value):
        ns = [point.n for point in value]
        if ns != sorted(ns):
            raise DimensionError("probe points must be sorted by N")
        return value

    @property
    def matches_expectation(self) -> bool:
        return self.expected is None or self.expected == self.verdict


class VerificationRecord(BaseModel):
    """One inequality trial: LHS <= constant * ||T||

    `status` is "holds", "violation", or "inconclusive" (the ratio exceeds the
    constant but the norm is only a lower bound, so the ratio is overestimated).
    """

    model_config = ConfigDict(frozen=True)

    form_id: str
    field: ScalarField
    m: int
    k: int
    dims: tuple[int, ...]
    pspec: str
    partition: str
    q: str
    lhs: float
    norm: NormEstimate
    constant_bound: ConstantBound
    ratio: float
    holds: bool
    status: str
    tol: float

    @model_validator(mode="after")
    def _consistent(self):
        within = self.ratio <= self.constant_bound.value + self.tol
        if self.holds != within:
            raise DimensionError(
                f"record {self.form_id}: holds={self.holds} but ratio {self.ratio} "
                f"vs constant {self.constant_bound.value}"
            )
        return self
