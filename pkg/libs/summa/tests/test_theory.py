from fractions import Fraction

import pytest
from scipy.special import gamma

from summa.base import INF, PSpec, Regime, Verdict
from summa.exceptions import DimensionError, HypothesisError
from summa.theory import (
    bh_interpolation_endpoints,
    bh_partial_admissible,
    classify,
    diagonal_exponent,
    expected_verdict,
    harmonic_number,
    hl_admissible,
    hl_exponent,
    hl_exponent_uniform,
    interpolate_exponents,
    interpolated_bh_exponent,
    ksz_alpha,
    ksz_norm_exponent,
    ksz_theory_slope,
    lambda_chain,
    lambda_zero,
    lanczos_gamma,
    optimality_lower_bounds,
)


class TestRegimes:
    @pytest.mark.parametrize(
        "pspec, regime",
        [
            ("inf,inf", Regime.SUBCRITICAL_HL),
            ("8,8", Regime.SUBCRITICAL_HL),
            ("4,4", Regime.CRITICAL_BAND),
            ("3,3", Regime.CRITICAL_BAND),
            ("2,2", Regime.OUT_OF_SCOPE),
            ("1,inf", Regime.OUT_OF_SCOPE),
        ],
    )
    def test_classify(self, pspec, regime):
        assert classify(pspec).regime == regime

    def test_inv_sum_is_exact(self):
        assert classify("3,6,inf").inv_sum == Fraction(1, 2)


class TestExponents:
    @pytest.mark.parametrize(
        "k, m, pspec, rho",
        [
            (2, 2, "inf,inf", Fraction(4, 3)),
            (2, 2, "8,8", Fraction(8, 5)),
            (2, 2, "4,4", Fraction(2)),
            (2, 2, "3,3", Fraction(3)),
            (1, 3, "inf,inf,inf", Fraction(1)),
            (3, 3, "8,inf,inf", Fraction(24, 15)),
        ],
    )
    def test_hl_exponent(self, k, m, pspec, rho):
        assert hl_exponent(k, m, pspec) == rho

    def test_outside_range(self):
        with pytest.raises(HypothesisError) as info:
            hl_exponent(2, 2, "2,2")
        assert "|1/p| < 1" in info.value.hypothesis

    def test_arity(self):
        with pytest.raises(DimensionError):
            hl_exponent(3, 2, "inf,inf")
        with pytest.raises(DimensionError):
            hl_exponent(1, 3, "inf,inf")

    def test_uniform_formula(self):
        assert hl_exponent_uniform(2, 2, INF) == Fraction(4, 3)
        assert hl_exponent_uniform(2, 2, 3) == 3
        assert hl_exponent_uniform(2, 2, 8) == Fraction(8, 5)
        with pytest.raises(HypothesisError):
            hl_exponent_uniform(2, 2, 2)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_formulas_agree_at_p_2m(self, m):
        for k in range(1, m + 1):
            p = 2 * m
            subcritical = Fraction(2 * k * p, k * p + p - 2 * m)
            assert hl_exponent_uniform(k, m, p) == Fraction(p, p - m) == subcritical
            assert hl_exponent(k, m, PSpec.uniform(p, m)) == 2

    def test_continuous_at_one_half(self):
        for k in range(1, 7):
            for j in range(1, 11):
                inv_sum = 0.5 - 10.0 ** (-j)
                subcritical = 2 * k / (k + 1 - 2 * inv_sum)
                diagonal = 1 / (1 - inv_sum)
                assert abs(subcritical - 2) <= 4 * k * 10.0 ** (-j)
                assert abs(diagonal - 2) <= 5 * 10.0 ** (-j)
            assert abs(2 * k / (k + 1 - 2 * 0.5) - 1 / (1 - 0.5)) < 1e-9

    def test_diagonal_exponent(self):
        assert diagonal_exponent("4,4") == 2
        assert diagonal_exponent("inf,inf") == 1

    def test_ksz_exponents(self):
        assert ksz_alpha(INF) == Fraction(1, 2)
        assert ksz_alpha(4) == Fraction(1, 4)
        assert ksz_alpha(Fraction(3, 2)) == 0
        assert ksz_norm_exponent(2, "inf,inf") == Fraction(3, 2)
        assert ksz_norm_exponent(3, "4,4,4") == Fraction(5, 4)


class TestAdmissibility:
    def test_bh_partial(self):
        assert bh_partial_admissible(2, (1, 2))
        assert bh_partial_admissible(2, ("4/3", "4/3"))
        assert not bh_partial_admissible(2, (1, 1))
        assert bh_partial_admissible(3, (1, 2, 2))
        with pytest.raises(DimensionError):
            bh_partial_admissible(2, (1, 3))
        with pytest.raises(DimensionError):
            bh_partial_admissible(3, (1, 2))

    def test_hl(self):
        assert hl_admissible(2, "8,8", ("8/5", "8/5"))
        assert hl_admissible(2, "8,8", ("4/3", 2))
        assert not hl_admissible(2, "8,8", ("4/3", "4/3"))
        assert not hl_admissible(2, "8,8", (1, 2))
        assert not hl_admissible(2, "8,8", (2, "inf"))

    def test_hl_needs_subcritical_range(self):
        with pytest.raises(HypothesisError):
            hl_admissible(2, "3,3", (2, 2))


class TestInterpolation:
    def test_two_vectors(self):
        q = interpolate_exponents([(1, 2), (2, "inf")], ["1/2", "1/2"])
        assert q.entries == (Fraction(4, 3), Fraction(4))

    def test_weights_sum_to_one(self):
        with pytest.raises(DimensionError):
            interpolate_exponents([(1,), (2,)], [0.5, 0.6])
        with pytest.raises(DimensionError):
            interpolate_exponents([(1,), (2, 2)], [0.5, 0.5])

    @pytest.mark.parametrize("k", range(1, 7))
    @pytest.mark.parametrize(
        "inv_sum",
        [Fraction(0), Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)],
    )
    def test_identity(self, k, inv_sum):
        first, second = bh_interpolation_endpoints(k)
        q = interpolate_exponents([first, second], [2 * inv_sum, 1 - 2 * inv_sum])
        rho = Fraction(2 * k) / (k + 1 - 2 * inv_sum)
        assert q.entries == (lambda_zero(k, inv_sum),) + (rho,) * (k - 1)
        assert q.reciprocal_sum == Fraction(k + 1, 2)
        assert interpolated_bh_exponent(k, inv_sum) == q

    def test_lambda_chain(self):
        chain = lambda_chain(2, "8,8")
        assert chain == (Fraction(8, 7), Fraction(4, 3), Fraction(8, 5))
        assert lambda_chain(3, "inf,inf,inf") == (Fraction(3, 2),) * 4

    def test_lambda_chain_needs_subcritical_range(self):
        with pytest.raises(HypothesisError):
            lambda_chain(2, "3,3")

    @pytest.mark.parametrize(
        "k, pspec",
        [(1, "8,8"), (2, "8,8"), (2, "4,4"), (3, "inf,inf,inf"), (2, "inf,6,12")],
    )
    def test_lambda_chain_ends_at_hl_exponent(self, k, pspec):
        chain = lambda_chain(k, pspec)
        assert len(chain) == PSpec.parse(pspec).m + 1
        assert chain[-1] == hl_exponent(k, PSpec.parse(pspec).m, pspec)


class TestOptimality:
    def test_lower_bounds(self):
        bounds = optimality_lower_bounds(2, 2, "inf,inf")
        assert bounds == (Fraction(4, 3), Fraction(1), Fraction(4, 3))
        bounds = optimality_lower_bounds(1, 2, "inf,inf")
        assert bounds.s == 1

    def test_ksz_theory_slope(self):
        assert ksz_theory_slope(2, 2, "inf,inf", (1,)) == Fraction(1, 2)
        assert ksz_theory_slope(2, 2, "inf,inf", ("4/3", "4/3")) == 0
        with pytest.raises(DimensionError):
            ksz_theory_slope(2, 2, "inf,inf", (1, 1, 1))

    def test_expected_verdict(self):
        assert expected_verdict(Fraction(1, 2), 0.05) == Verdict.GROWS
        assert expected_verdict(0, 0.05) == Verdict.BOUNDED
        assert expected_verdict(-0.2, 0.05) == Verdict.BOUNDED
        assert expected_verdict(0.03, 0.05) is None


class TestSpecialFunctions:
    @pytest.mark.parametrize("z", [0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.7, 10.2, -0.5, -2.3])
    def test_lanczos_gamma(self, z):
        assert lanczos_gamma(z) == pytest.approx(gamma(z), rel=1e-12)

    @pytest.mark.parametrize("z", [0, -1, -4])
    def test_poles(self, z):
        with pytest.raises(DimensionError):
            lanczos_gamma(z)

    def test_harmonic_number(self):
        assert harmonic_number(0) == 0
        assert harmonic_number(1) == 1
        assert harmonic_number(4) == pytest.approx(25 / 12, rel=1e-15)
