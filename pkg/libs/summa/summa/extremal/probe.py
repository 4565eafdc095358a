from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, NamedTuple, Optional, Sequence

import numpy as np
from scipy.stats import linregress
from theflow.settings import settings as flowsettings

from summa.base import (
    BaseComponent,
    DivergenceReport,
    ExponentVector,
    Node,
    PartitionSpec,
    ProbePoint,
    ProbeResult,
    PSpec,
    Verdict,
    as_float,
)
from summa.exceptions import DegenerateFamilyError, DimensionError
from summa.forms import MultilinearForm, block_value_tensor
from summa.norms import NormEstimator, mixed_norm
from summa.theory import diagonal_exponent, expected_verdict, ksz_theory_slope

from .ksz import KSZSampler
from .zalduendo import (
    diagonal_lq,
    diagonal_lq_limit,
    power_sum,
    zalduendo_form,
)

logger = logging.getLogger(__name__)


class SlopeFit(NamedTuple):
    slope: float
    intercept: float
    stderr: float


def fit_loglog_slope(points: Sequence[tuple[float, float]]) -> SlopeFit:
    """Least squares fit of ln y = intercept + slope * ln x"""
    if len(points) < 2:
        raise DimensionError(f"need at least 2 points, got {len(points)}")
    x = np.array([point[0] for point in points], dtype=float)
    y = np.array([point[1] for point in points], dtype=float)
    if np.any(x <= 0) or np.any(y <= 0):
        raise DimensionError("log-log fits need positive coordinates")
    fit = linregress(np.log(x), np.log(y))
    stderr = float(fit.stderr) if np.isfinite(fit.stderr) else 0.0
    return SlopeFit(float(fit.slope), float(fit.intercept), stderr)


def as_exponents(q: Any, k: int) -> ExponentVector:
    """A flat exponent s becomes (s, ..., s) with k entries"""
    q = ExponentVector.parse(q)
    if q.k == 1 and k > 1:
        return ExponentVector.uniform(q.entries[0], k)
    if q.k != k:
        raise DimensionError(f"expected {k} exponents, got {q.k}")
    return q


def lhs_for_family(form: MultilinearForm, part: PartitionSpec, q: Any) -> float:
    """The mixed q-norm of the k-block coefficients of `form`"""
    return mixed_norm(block_value_tensor(form, part), as_exponents(q, part.k))


class FormFamily(BaseComponent):
    """Forms indexed by the extent N; calling the family with N builds the form"""

    name: str = "family"
    m: int
    pspec: PSpec

    def run(self, n: int) -> MultilinearForm:
        raise NotImplementedError

    def point(self, n: int, part: PartitionSpec, q: ExponentVector) -> ProbePoint:
        raise NotImplementedError

    def divergence(
        self, n_list: Sequence[int], q: ExponentVector
    ) -> Optional[DivergenceReport]:
        return None

    def theory_slope(self, k: int, q: ExponentVector) -> Optional[float]:
        return None

    def expected(
        self, k: int, q: ExponentVector, threshold: float
    ) -> Optional[Verdict]:
        return None


def _ratio(lhs: float, norm: float, n: int, family: str) -> float:
    if norm <= 0:
        raise DegenerateFamilyError(f"{family} has zero norm at N={n}")
    return lhs / norm


class KSZFamily(FormFamily):
    """Random +-1 forms on l_{p_1}^N x ... x l_{p_m}^N, one typical draw per N"""

    name: str = "ksz"
    sampler: KSZSampler = Node(
        default_callback=lambda _: KSZSampler(selection="median")
    )

    def run(self, n: int) -> MultilinearForm:
        form, _ = self.sampler((n,) * self.m, self.pspec)
        return form

    def point(self, n: int, part: PartitionSpec, q: ExponentVector) -> ProbePoint:
        form, estimate = self.sampler((n,) * self.m, self.pspec)
        lhs = lhs_for_family(form, part, q)
        return ProbePoint(
            n=n,
            lhs=lhs,
            norm=estimate.value,
            certified=estimate.certified,
            ratio=_ratio(lhs, estimate.value, n, self.name),
        )

    def theory_slope(self, k: int, q: ExponentVector) -> Optional[float]:
        return float(ksz_theory_slope(k, self.m, self.pspec, q))

    def expected(
        self, k: int, q: ExponentVector, threshold: float
    ) -> Optional[Verdict]:
        return expected_verdict(ksz_theory_slope(k, self.m, self.pspec, q), threshold)


class ZalduendoFamily(FormFamily):
    """Diagonal forms with coefficients j^beta.

    With `analytic` on, probe points are computed from power sums without
    building the tensor, so N can reach 10^6. Every partition collapses the
    block tensor onto the diagonal, so the mixed q-norm is ||(j^beta)||_{q_1}.
    """

    name: str = "zalduendo"
    beta: float
    analytic: bool = True
    estimator: NormEstimator = Node(default_callback=lambda _: NormEstimator())

    def run(self, n: int) -> MultilinearForm:
        return zalduendo_form(self.m, n, self.pspec, self.beta)

    @property
    def rho(self) -> float:
        return as_float(diagonal_exponent(self.pspec))

    def point(self, n: int, part: PartitionSpec, q: ExponentVector) -> ProbePoint:
        if self.analytic:
            lhs = diagonal_lq(n, self.beta, as_float(q.entries[0]))
            norm = diagonal_lq(n, self.beta, self.rho)
            certified = True
        else:
            form = self.run(n)
            lhs = lhs_for_family(form, part, q)
            estimate = self.estimator(form)
            norm, certified = estimate.value, estimate.certified
        return ProbePoint(
            n=n,
            lhs=lhs,
            norm=norm,
            certified=certified,
            ratio=_ratio(lhs, norm, n, self.name),
        )

    def divergence(
        self, n_list: Sequence[int], q: ExponentVector
    ) -> Optional[DivergenceReport]:
        s = as_float(q.entries[0])
        first, last = min(n_list), max(n_list)
        growth = power_sum(last, self.beta * s) / power_sum(first, self.beta * s)
        return DivergenceReport(
            partial_sum_growth=growth,
            norm_limit=diagonal_lq_limit(self.beta, self.rho),
            lhs_limit=diagonal_lq_limit(self.beta, s),
            dominated=s >= self.rho,
        )

    def expected(
        self, k: int, q: ExponentVector, threshold: float
    ) -> Optional[Verdict]:
        s = as_float(q.entries[0])
        if s >= self.rho or self.beta * s < -1:
            return Verdict.BOUNDED
        if self.beta * self.rho < -1:
            return Verdict.GROWS
        return None


def slope_verdict(slope: float, stderr: float, threshold: float) -> Verdict:
    """Grows when the slope clears the threshold by two standard errors,
    Bounded when it stays two standard errors below it
    """
    if slope - 2 * stderr > threshold:
        return Verdict.GROWS
    if slope + 2 * stderr < threshold:
        return Verdict.BOUNDED
    return Verdict.INCONCLUSIVE


def divergence_verdict(report: DivergenceReport, growth_factor: float) -> Verdict:
    """Bounded when s >= rho or the left-hand side converges; Grows when it
    diverges while the norm converges and the partial sums grew by more than
    `growth_factor`
    """
    if report.dominated or math.isfinite(report.lhs_limit):
        return Verdict.BOUNDED
    if math.isfinite(report.norm_limit) and report.partial_sum_growth > growth_factor:
        return Verdict.GROWS
    return Verdict.INCONCLUSIVE


class RatioProbe(BaseComponent):
    """Track LHS / ||T|| along a family as N grows and decide whether it grows.

    Args:
        family: the forms, indexed by N
        part: partition of the m slots into k blocks
        q: exponent of the left-hand side, flat (one entry) or mixed
        n_list: at least three extents
    """

    family: FormFamily
    part: PartitionSpec
    q: ExponentVector
    n_list: list[int]
    growth_threshold: float = getattr(flowsettings, "SUMMA_GROWTH_THRESHOLD", 0.05)
    growth_factor: float = getattr(flowsettings, "SUMMA_GROWTH_FACTOR", 2.0)
    concurrent: bool = getattr(flowsettings, "SUMMA_CONCURRENT", True)

    def run(self) -> ProbeResult:
        n_list = sorted(set(int(n) for n in self.n_list))
        if len(n_list) < 3:
            raise DimensionError(f"need at least 3 values of N, got {n_list}")
        part = self.part
        if part.m != self.family.m:
            raise DimensionError(
                f"partition covers {part.m} slots, the family has {self.family.m}"
            )
        q = as_exponents(self.q, part.k)

        if self.concurrent:
            with ThreadPoolExecutor() as executor:
                futures = [
                    executor.submit(self.family.point, n, part, q) for n in n_list
                ]
                points = [future.result() for future in futures]
        else:
            points = [self.family.point(n, part, q) for n in n_list]
        for point in points:
            logger.info(
                f"{self.family.name} N={point.n}: lhs={point.lhs} "
                f"norm={point.norm} ratio={point.ratio}"
            )

        fit = fit_loglog_slope([(point.n, point.ratio) for point in points])
        divergence = self.family.divergence(n_list, q)
        if divergence is not None:
            verdict = divergence_verdict(divergence, self.growth_factor)
        else:
            verdict = slope_verdict(fit.slope, fit.stderr, self.growth_threshold)

        return ProbeResult(
            family=self.family.name,
            exponent_s=(
                float(part.k / q.reciprocal_sum) if q.reciprocal_sum else math.inf
            ),
            points=tuple(points),
            slope=fit.slope,
            intercept=fit.intercept,
            slope_stderr=fit.stderr,
            verdict=verdict,
            growth_threshold=self.growth_threshold,
            theory_slope=self.family.theory_slope(part.k, q),
            expected=self.family.expected(part.k, q, self.growth_threshold),
            divergence=divergence,
        )


def ratio_probe(
    family: FormFamily,
    part: PartitionSpec,
    q: Any,
    n_list: Sequence[int],
    **params,
) -> ProbeResult:
    return RatioProbe(
        family=family,
        part=part,
        q=ExponentVector.parse(q),
        n_list=list(n_list),
        **params,
    )()
