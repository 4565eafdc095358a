import numpy as np
import pytest

from summa.base import NormMethod
from summa.exceptions import (
    DimensionError,
    HypothesisError,
    NumericalError,
    ResourceError,
    UnsupportedError,
)
from summa.forms import MultilinearForm, diagonal_form, evaluate, gaussian_form
from summa.norms import (
    NormEstimator,
    dual_norm,
    estimate_norm,
    lp_norm,
    maximize_slot,
    upper_bound_diagonal,
)


class TestMaximizeSlot:
    def test_sup_ball(self):
        x, optimum = maximize_slot(np.array([3.0, -4.0]), "inf")
        assert np.array_equal(x, [1.0, -1.0])
        assert optimum == 7.0

    def test_sign_of_zero(self):
        x, _ = maximize_slot(np.array([0.0, -2.0]), "inf")
        assert np.array_equal(x, [1.0, -1.0])

    def test_euclidean_ball(self):
        x, optimum = maximize_slot(np.array([3.0, 4.0]), 2)
        assert np.allclose(x, [0.6, 0.8], rtol=1e-15)
        assert optimum == pytest.approx(5.0, rel=1e-15)

    def test_l4_ball(self):
        x, optimum = maximize_slot(np.array([1.0, 1.0]), 4)
        assert optimum == pytest.approx(2**0.75, rel=1e-15)
        assert np.allclose(x, [2**-0.25, 2**-0.25], rtol=1e-15)
        assert np.sum(np.abs(x) ** 4) == pytest.approx(1.0, rel=1e-14)

    def test_l1_ball_takes_first_largest(self):
        x, optimum = maximize_slot(np.array([1.0, -3.0, 3.0]), 1)
        assert np.array_equal(x, [0.0, -1.0, 0.0])
        assert optimum == 3.0

    def test_complex_phase(self):
        c = np.array([1j, 0.0, -2.0 + 0j])
        x, optimum = maximize_slot(c, "inf")
        assert optimum == 3.0
        assert np.allclose(np.abs(x), 1.0)
        assert np.sum(c * x) == pytest.approx(3.0, abs=1e-15)

    def test_zero_vector(self):
        x, optimum = maximize_slot(np.zeros(3), 3)
        assert np.array_equal(x, [1.0, 0.0, 0.0])
        assert optimum == 0.0

    def test_exponent_below_one(self):
        with pytest.raises(DimensionError):
            maximize_slot(np.ones(2), 0.5)

    @pytest.mark.parametrize("p", [1, "4/3", 2, 5, "inf"])
    def test_optimum_is_dual_norm(self, rng, p):
        c = rng.standard_normal(6)
        x, optimum = maximize_slot(c, p)
        assert optimum == pytest.approx(dual_norm(c, p), rel=1e-14)
        assert abs(np.dot(c, x)) == pytest.approx(optimum, rel=1e-12)


    @pytest.mark.parametrize("p", [1, "4/3", 2, 3, "inf"])
    @pytest.mark.parametrize("field", ["real", "complex"])
    def test_optimum_dominates_unit_ball(self, rng, p, field):
        c = rng.standard_normal(5)
        points = rng.standard_normal((1000, 5))
        if field == "complex":
            c = c + 1j * rng.standard_normal(5)
            points = points + 1j * rng.standard_normal((1000, 5))
        x, optimum = maximize_slot(c, p)
        assert lp_norm(x, p) <= 1 + 1e-12
        for point in points:
            point = point / lp_norm(point, p)
            assert abs(np.dot(c, point)) <= optimum * (1 + 1e-12)


class TestExactMethods:
    def test_rank_one(self):
        coeffs = np.zeros((3, 3))
        coeffs[0, 0] = 1.0
        for p in ["inf", 3, 4]:
            form = MultilinearForm.from_coeffs(coeffs, [p, p])
            estimate = estimate_norm(form)
            assert estimate.value == pytest.approx(1.0, rel=1e-15)
            assert estimate.certified

    def test_hadamard(self, hadamard):
        estimate = estimate_norm(hadamard)
        assert estimate.value == 2.0
        assert estimate.method == NormMethod.EXACT_SIGN_ENUM
        assert estimate.certified
        assert abs(evaluate(hadamard, estimate.witness)) == pytest.approx(2.0)

    def test_diagonal_closed_form(self):
        form = diagonal_form([3.0, 4.0], "4,4")
        estimate = estimate_norm(form)
        assert estimate.method == NormMethod.DIAGONAL_CLOSED_FORM
        assert estimate.certified
        assert estimate.value == pytest.approx(5.0, rel=1e-15)
        assert upper_bound_diagonal([3.0, 4.0], "4,4") == pytest.approx(5.0)

    def test_diagonal_witness(self, rng):
        diag = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        form = diagonal_form(diag, "3,inf,8")
        estimate = estimate_norm(form)
        assert estimate.method == NormMethod.DIAGONAL_CLOSED_FORM
        for x, p in zip(estimate.witness, [3.0, np.inf, 8.0]):
            norm = np.max(np.abs(x)) if np.isinf(p) else np.sum(np.abs(x) ** p) ** (1 / p)
            assert norm == pytest.approx(1.0, rel=1e-12)
        value = evaluate(form, estimate.witness)
        assert abs(value) == pytest.approx(estimate.value, rel=1e-10)

    def test_exact_witness(self, rng):
        form = gaussian_form((3, 4, 2), "inf,inf,inf", rng)
        estimate = NormEstimator(concurrent=False)(form)
        assert estimate.method == NormMethod.EXACT_SIGN_ENUM
        assert abs(evaluate(form, estimate.witness)) == pytest.approx(
            estimate.value, rel=1e-10
        )

    def test_force_exact_over_budget(self, hadamard):
        with pytest.raises(ResourceError):
            NormEstimator(enum_budget=2, force_exact=True)(hadamard)

    def test_force_exact_without_method(self, rng):
        form = gaussian_form((3, 3), "4,4", rng)
        with pytest.raises(UnsupportedError):
            NormEstimator(force_exact=True)(form)

    def test_over_budget_falls_back(self, hadamard):
        estimate = NormEstimator(enum_budget=2, restarts=4, concurrent=False)(
            hadamard
        )
        assert estimate.method == NormMethod.ALTERNATING_ASCENT
        assert not estimate.certified
        assert estimate.value == pytest.approx(2.0, rel=1e-12)

    def test_upper_bound_outside_range(self):
        with pytest.raises(HypothesisError):
            upper_bound_diagonal([1.0, 2.0], "2,2")


class TestAlternatingAscent:
    def test_lower_bound_of_diagonal(self):
        form = diagonal_form([3.0, 4.0], "4,4")
        estimator = NormEstimator(
            allow_exact=False, restarts=8, max_iters=500, concurrent=False
        )
        estimate = estimator(form)
        assert estimate.method == NormMethod.ALTERNATING_ASCENT
        assert not estimate.certified
        assert estimate.value <= 5.0 * (1 + 1e-12)
        assert estimate.value == pytest.approx(5.0, rel=1e-6)
        assert estimate.restarts_used == 8

    def test_witness_reproduces_value(self, rng, serial_estimator):
        form = gaussian_form((3, 3, 3), "3,4,inf", rng, field="complex")
        estimate = serial_estimator(form)
        assert abs(evaluate(form, estimate.witness)) == pytest.approx(
            estimate.value, rel=1e-10
        )

    def test_deterministic_across_parallelism(self, rng):
        form = gaussian_form((4, 4), "3,3", rng)
        serial = NormEstimator(restarts=6, seed=3, concurrent=False)(form)
        parallel = NormEstimator(restarts=6, seed=3, concurrent=True)(form)
        assert serial.value == parallel.value
        assert serial.iterations == parallel.iterations

    def test_never_exceeds_exact(self, rng):
        estimator = NormEstimator(allow_exact=False, restarts=4, concurrent=False)
        for _ in range(10):
            form = gaussian_form((3, 3), "inf,inf", rng)
            exact = estimate_norm(form)
            assert estimator(form).value <= exact.value * (1 + 1e-12)

    def test_witness_lies_in_unit_balls(self, rng, serial_estimator):
        for pspec, field in [("3,4,inf", "complex"), ("4/3,2,6", "real")]:
            form = gaussian_form((3, 4, 3), pspec, rng, field=field)
            estimate = serial_estimator(form)
            for x, p in zip(estimate.witness, form.pspec.entries):
                assert lp_norm(x, p) <= 1 + 1e-12

    @pytest.mark.parametrize(
        "pspec, field, scale",
        [
            ("inf,inf", "real", -2.5),
            ("3,4", "real", 0.125),
            ("3,inf", "complex", 2 - 1j),
        ],
    )
    def test_scale_equivariance(self, rng, pspec, field, scale):
        form = gaussian_form((3, 4), pspec, rng, field=field)
        params = {"restarts": 4, "seed": 2, "concurrent": False}
        base = estimate_norm(form, params)
        scaled = estimate_norm(form.scaled(scale), params)
        assert scaled.method == base.method
        assert scaled.value == pytest.approx(abs(scale) * base.value, rel=1e-10)

    def test_ascent_losing_ground_raises(self, rng, mocker):
        form = gaussian_form((3, 3), "3,3", rng)
        mocker.patch(
            "summa.norms.estimation.maximize_slot",
            side_effect=lambda c, p: (np.zeros(len(c)), 0.0),
        )
        estimator = NormEstimator(allow_exact=False, restarts=1, concurrent=False)
        with pytest.raises(NumericalError, match="decreased"):
            estimator(form)

    def test_restarts_must_be_positive(self, hadamard):
        with pytest.raises(DimensionError):
            NormEstimator(restarts=0)(hadamard)

    @pytest.mark.slow
    def test_quality_against_enumeration(self):
        rng = np.random.default_rng(7)
        estimator = NormEstimator(allow_exact=False, restarts=32, concurrent=False)
        matched = 0
        for _ in range(50):
            form = gaussian_form((3, 3), "inf,inf", rng)
            exact = estimate_norm(form).value
            ascent = estimator(form).value
            assert ascent <= exact * (1 + 1e-12)
            matched += abs(ascent - exact) <= 1e-6 * exact
        assert matched >= 48
