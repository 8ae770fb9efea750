"""Unit tests for the core transform operations and their error handling.

Derived constants were frozen from a 50-digit mpmath evaluation of the
defining formulas, independent of the library code.
"""

import math

import pytest

from ftprop import (
    DomainError,
    SingularityError,
    StudyRecord,
    UndefinedInverseError,
    asin_sqrt_limit,
    ft_inverse_clamped,
    ft_inverse_raw,
    ft_transform,
    ft_transform_counts,
    harmonic_n,
    limit_inverse,
    mpe,
    mpe_pointwise,
    sample_size_for_mpe,
    sample_size_real,
    theta_domain,
)

HALF_PI = math.pi / 2
QUARTER_PI = math.pi / 4


class TestForwardTransform:
    def test_symmetry_center_any_n(self):
        # theta(0.5) = pi/4 holds for every n: the two asin arguments are
        # complementary
        for n in (1, 2, 3, 7, 10, 100, 1e6):
            assert ft_transform(0.5, n) == pytest.approx(QUARTER_PI, abs=1e-12)

    def test_n1_endpoints(self):
        assert ft_transform(0.0, 1) == pytest.approx(math.pi / 8, abs=1e-12)
        assert ft_transform(1.0, 1) == pytest.approx(3 * math.pi / 8, abs=1e-12)

    def test_derived_point(self):
        # mpmath, 50 digits: theta(0.25, 100)
        assert ft_transform(0.25, 100) == pytest.approx(
            0.52643376048251221925, abs=1e-14
        )

    def test_result_within_domain(self):
        for n in (1, 5, 100):
            dom = theta_domain(n)
            for p in (0.0, 0.1, 0.5, 0.9, 1.0):
                assert dom.lower <= ft_transform(p, n) <= dom.upper

    @pytest.mark.parametrize("p,n", [(-0.1, 10), (1.1, 10), (0.5, 0), (0.5, -3)])
    def test_domain_errors(self, p, n):
        with pytest.raises(DomainError):
            ft_transform(p, n)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            ft_transform(math.nan, 10)
        with pytest.raises(DomainError):
            ft_transform(0.5, math.inf)


class TestCountsWrapper:
    def test_half(self):
        assert ft_transform_counts(StudyRecord("s", 1, 2)) == pytest.approx(
            QUARTER_PI, abs=1e-12
        )

    def test_zero_events(self):
        assert ft_transform_counts(StudyRecord("s", 0, 1)) == pytest.approx(
            math.pi / 8, abs=1e-12
        )

    def test_matches_proportion_form(self):
        assert ft_transform_counts(StudyRecord("s", 3, 10)) == ft_transform(0.3, 10)

    def test_record_invariants(self):
        with pytest.raises(DomainError):
            StudyRecord("bad", 11, 10)
        with pytest.raises(DomainError):
            StudyRecord("bad", 0, 0)
        with pytest.raises(DomainError):
            StudyRecord("bad", -1, 10)


class TestLimitTransform:
    def test_endpoints_and_center(self):
        assert asin_sqrt_limit(0.0) == 0.0
        assert asin_sqrt_limit(1.0) == pytest.approx(HALF_PI, abs=1e-15)
        assert asin_sqrt_limit(0.5) == pytest.approx(QUARTER_PI, abs=1e-15)

    def test_rejects_outside_unit(self):
        with pytest.raises(DomainError):
            asin_sqrt_limit(-1e-9)
        with pytest.raises(DomainError):
            asin_sqrt_limit(1.0001)


class TestThetaDomain:
    def test_n1(self):
        dom = theta_domain(1)
        assert dom.lower == pytest.approx(0.3927, abs=5e-5)
        assert dom.upper == pytest.approx(1.1781, abs=5e-5)

    def test_large_n_approaches_full_range(self):
        dom = theta_domain(1e12)
        assert dom.lower < 1e-5
        assert dom.upper > HALF_PI - 1e-5

    def test_n100_derived(self):
        # mpmath, 50 digits: [0.049834326..., 1.520962000...]
        dom = theta_domain(100)
        assert dom.lower == pytest.approx(0.049834326245581014, abs=1e-14)
        assert dom.upper == pytest.approx(1.5209620005493156, abs=1e-14)

    def test_endpoints_are_transform_values(self):
        for n in (1, 3.5, 50, 1e4):
            dom = theta_domain(n)
            assert dom.lower == ft_transform(0.0, n)
            assert dom.upper == ft_transform(1.0, n)

    def test_ordering(self):
        for n in (0.5, 1, 10, 1e6):
            dom = theta_domain(n)
            assert 0 < dom.lower < QUARTER_PI < dom.upper < HALF_PI

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            theta_domain(0)


class TestHarmonicN:
    def test_equal_sizes(self):
        assert harmonic_n([10, 10, 10]) == pytest.approx(10.0, abs=1e-12)

    def test_exact_small_case(self):
        assert harmonic_n([2, 6]) == pytest.approx(3.0, abs=1e-12)

    def test_single(self):
        assert harmonic_n([5]) == 5.0

    def test_errors(self):
        with pytest.raises(DomainError):
            harmonic_n([])
        with pytest.raises(DomainError):
            harmonic_n([10, 0])
        with pytest.raises(DomainError):
            harmonic_n([10, -1])


class TestRawInverse:
    def test_symmetry_center(self):
        for n in (1, 7, 1000):
            assert ft_inverse_raw(QUARTER_PI, n) == pytest.approx(0.5, abs=1e-14)

    def test_roundtrip(self):
        theta = ft_transform(0.25, 4)
        assert ft_inverse_raw(theta, 4) == pytest.approx(0.25, abs=1e-10)

    def test_negative_radicand_raises(self):
        with pytest.raises(UndefinedInverseError):
            ft_inverse_raw(0.01, 10)

    def test_erratic_extension_beyond_domain(self):
        # theta=1.3 exceeds the n=1 upper limit ~1.178 yet the formula still
        # returns a real value < 1 (mpmath: 0.70855468071072931)
        p = ft_inverse_raw(1.3, 1)
        assert p == pytest.approx(0.70855468071072931, abs=1e-12)
        assert 0 < p < 1

    def test_singularities(self):
        with pytest.raises(SingularityError):
            ft_inverse_raw(0.0, 10)
        with pytest.raises(SingularityError):
            ft_inverse_raw(HALF_PI, 10)


class TestClampedInverse:
    def test_clamps_low(self):
        assert ft_inverse_clamped(0.2, 1) == 0.0

    def test_clamps_high(self):
        assert ft_inverse_clamped(1.3, 1) == 1.0

    def test_interior_matches_raw(self):
        theta = ft_transform(0.37, 50)
        assert ft_inverse_clamped(theta, 50) == ft_inverse_raw(theta, 50)

    def test_symmetry_center(self):
        assert ft_inverse_clamped(QUARTER_PI, 50) == pytest.approx(0.5, abs=1e-14)

    def test_rejects_outside_range(self):
        with pytest.raises(DomainError):
            ft_inverse_clamped(-0.1, 10)
        with pytest.raises(DomainError):
            ft_inverse_clamped(HALF_PI + 0.1, 10)


class TestLimitInverse:
    def test_values(self):
        assert limit_inverse(0.0) == 0.0
        assert limit_inverse(HALF_PI) == pytest.approx(1.0, abs=1e-15)
        assert limit_inverse(QUARTER_PI) == pytest.approx(0.5, abs=1e-15)

    def test_inverts_limit_transform(self):
        for p in (0.0, 0.123, 0.5, 0.987, 1.0):
            assert limit_inverse(asin_sqrt_limit(p)) == pytest.approx(p, abs=1e-12)

    def test_rejects_outside_range(self):
        with pytest.raises(DomainError):
            limit_inverse(2.0)


class TestMpe:
    def test_reported_values(self):
        # mpmath: 0.022470506863..., 0.014225772073...
        assert mpe(200) == pytest.approx(0.022470506863257047, abs=1e-14)
        assert mpe(500) == pytest.approx(0.014225772073055081, abs=1e-14)

    def test_n1_exact(self):
        assert mpe(1) == pytest.approx(0.25, abs=1e-14)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            mpe(0)


class TestMpePointwise:
    def test_agrees_with_canonical_at_one(self):
        assert mpe_pointwise(1.0, 200) == pytest.approx(mpe(200), abs=1e-12)

    def test_zero_at_center(self):
        for n in (1, 10, 1e5):
            assert mpe_pointwise(0.5, n) == pytest.approx(0.0, abs=1e-12)

    def test_derived_point(self):
        # mpmath: 0.041346332401720355
        assert mpe_pointwise(0.9, 10) == pytest.approx(
            0.041346332401720355, abs=1e-13
        )
        assert mpe_pointwise(0.9, 10) > 0

    def test_p_zero_excluded(self):
        with pytest.raises(DomainError):
            mpe_pointwise(0.0, 10)
        with pytest.raises(DomainError):
            mpe_pointwise(1.5, 10)


class TestSampleSize:
    def test_reported_values(self):
        assert sample_size_for_mpe(0.01) == 1013
        assert sample_size_for_mpe(0.05) == 40

    def test_exact_integer_solution(self):
        # tan^2(pi/4) = 1; fp noise must not bump the ceiling to 2
        assert sample_size_for_mpe(0.25) == 1

    def test_raw_values(self):
        # mpmath: 1012.5452355643830, 39.863458189061401
        assert sample_size_real(0.01) == pytest.approx(1012.5452355643830, rel=1e-12)
        assert sample_size_real(0.05) == pytest.approx(39.863458189061401, rel=1e-12)

    def test_rejects_outside_interval(self):
        for eps in (0.0, 0.5, -0.1, 0.7):
            with pytest.raises(DomainError):
                sample_size_for_mpe(eps)
