import math

import numpy as np
import pytest
from scipy import integrate, stats

from skewgof.core.calculators.distributions import make_density
from skewgof.core.models.enums import DensityKind
from skewgof.core.calculators.skew_model import (
    SkewAlternative,
    _kl_bracket,
    kullback_leibler,
    sample,
    scaled_kullback_leibler,
    shift_profile,
    skew_cdf,
    skew_pdf,
    skew_pdf_unrestricted,
    verify_condition2,
    verify_condition3,
)
from skewgof.exceptions import GofValidationError


@pytest.fixture
def skew_normal():
    return SkewAlternative.from_names("normal", "normal", 2.0)


class TestSkewAlternative:
    """Test construction of skew alternatives"""

    def test_negative_theta_rejected(self):
        with pytest.raises(GofValidationError):
            SkewAlternative.from_names("normal", "logistic", -0.1)

    def test_with_theta(self, skew_normal):
        a = skew_normal.with_theta(0.5)
        assert a.theta == 0.5
        assert a.f is skew_normal.f
        assert "theta=0.5" in a.label


class TestDensityAndCdf:
    """Test h(x, theta) and H(x, theta)"""

    @pytest.mark.parametrize("f,G,theta", [
        ("normal", "normal", 2.0),
        ("logistic", "student5", 0.7),
        ("uniform", "arcsine", 3.0),
    ])
    def test_density_integrates_to_one(self, f, G, theta):
        a = SkewAlternative.from_names(f, G, theta)
        lo, hi = a.f.support
        mass, _ = integrate.quad(lambda x: float(skew_pdf(a, x)), lo, hi, points=None if np.isinf(hi) else [0.0])
        assert mass == pytest.approx(1.0, abs=1e-9)

    def test_theta_zero_is_the_null(self):
        a = SkewAlternative.from_names("logistic", "normal", 0.0)
        x = np.linspace(-3.0, 3.0, 7)
        assert np.allclose(skew_pdf(a, x), a.f.pdf(x))
        assert np.allclose(skew_cdf(a, x), a.f.cdf(x))

    def test_cdf_matches_integrated_density(self, skew_normal):
        for x in (-1.0, 0.3, 1.7):
            expected, _ = integrate.quad(lambda t: float(skew_pdf(skew_normal, t)), -np.inf, x)
            assert skew_cdf(skew_normal, x) == pytest.approx(expected, abs=1e-9)

    def test_skew_normal_cdf_at_zero(self, skew_normal):
        # H(0) = 1/2 - arctan(theta) / pi for the skew-normal law
        assert skew_cdf(skew_normal, 0.0) == pytest.approx(0.5 - math.atan(2.0) / math.pi, abs=1e-10)

    def test_cdf_is_monotone(self, skew_normal):
        values = skew_cdf(skew_normal, np.linspace(-2.0, 4.0, 41))
        assert np.all(np.diff(values) >= 0.0)
        assert values[0] >= 0.0 and values[-1] <= 1.0

    @pytest.mark.parametrize("f,G", [("normal", "logistic"), ("student5", "arcsine"), ("uniform", "uniform")])
    @pytest.mark.parametrize("theta", [0.3, 1.0, 4.0])
    def test_reflection(self, f, G, theta):
        fd, Gd = make_density(f), make_density(G)
        x = np.linspace(-0.95, 0.95, 39) if fd.is_bounded else np.linspace(-5.0, 5.0, 41)
        h = skew_pdf_unrestricted(fd, Gd, theta, x)
        np.testing.assert_allclose(h, skew_pdf_unrestricted(fd, Gd, -theta, -x), rtol=1e-10, atol=1e-14)
        np.testing.assert_allclose(h + skew_pdf_unrestricted(fd, Gd, theta, -x), 2.0 * fd.pdf(x),
                                   rtol=1e-10, atol=1e-14)

    def test_scaled_profile_at_theta_zero(self):
        f, G = make_density("uniform"), make_density("normal")
        tau = shift_profile(f, G, 0.0, scaled=True)
        assert tau(0.75) == pytest.approx(2.0 * G.density_at_zero * 0.5)


class TestSampling:
    """Test the exact sampler"""

    def test_reproducible(self, skew_normal):
        assert np.array_equal(sample(skew_normal, 50, seed=9), sample(skew_normal, 50, seed=9))

    def test_skew_normal_mean(self, skew_normal):
        delta = 2.0 / math.sqrt(5.0)
        draws = sample(skew_normal, 40_000, seed=1)
        assert np.mean(draws) == pytest.approx(delta * math.sqrt(2.0 / math.pi), abs=0.02)

    def test_kolmogorov_smirnov_against_cdf(self):
        a = SkewAlternative.from_names("logistic", "logistic", 1.5)
        draws = sample(a, 1000, seed=2)
        result = stats.kstest(draws, lambda x: skew_cdf(a, x))
        assert result.pvalue > 0.001

    def test_bounded_support_respected(self):
        a = SkewAlternative.from_names("arcsine", "uniform", 5.0)
        draws = sample(a, 2000, seed=3)
        assert np.all(np.abs(draws) <= 1.0)

    def test_invalid_size(self, skew_normal):
        with pytest.raises(GofValidationError):
            sample(skew_normal, 0)


class TestKullbackLeibler:
    """Test K(theta) and its small-theta behaviour"""

    def test_bracket(self):
        assert float(_kl_bracket(0.0)) == 0.0
        assert float(_kl_bracket(1.0)) == pytest.approx(2.0 * math.log(2.0))
        eps = 0.3
        direct = (1 + eps) * math.log(1 + eps) + (1 - eps) * math.log(1 - eps)
        assert float(_kl_bracket(eps)) == pytest.approx(direct, rel=1e-12)

    def test_zero_at_null(self, skew_normal):
        assert kullback_leibler(skew_normal.with_theta(0.0)) == 0.0

    def test_matches_direct_integral(self, skew_normal):
        def integrand(x):
            h = float(skew_pdf(skew_normal, x))
            return h * math.log(h / float(skew_normal.f.pdf(x))) if h > 0 else 0.0

        direct, _ = integrate.quad(integrand, -12.0, 12.0, points=[0.0], limit=200,
                                   epsabs=1e-13, epsrel=1e-12)
        assert kullback_leibler(skew_normal) == pytest.approx(direct, rel=1e-7)

    @pytest.mark.parametrize("f", DensityKind.names())
    @pytest.mark.parametrize("G", DensityKind.names())
    def test_grows_from_zero(self, f, G):
        a = SkewAlternative.from_names(f, G, 0.0)
        for theta in (0.1, 0.5, 1.0):
            assert kullback_leibler(a.with_theta(theta / 2)) <= kullback_leibler(a.with_theta(theta))

    @pytest.mark.parametrize("f,G", [("normal", "normal"), ("uniform", "logistic"), ("student5", "arcsine")])
    def test_small_theta_limit(self, f, G):
        fd, Gd = make_density(f), make_density(G)
        limit = 2.0 * Gd.density_at_zero ** 2 * fd.variance
        assert scaled_kullback_leibler(fd, Gd, 0.0) == pytest.approx(limit)
        assert scaled_kullback_leibler(fd, Gd, 1e-3) == pytest.approx(limit, rel=1e-4)


class TestConditions:
    """Test the regularity checks"""

    @pytest.mark.parametrize("f,G", [("normal", "normal"), ("logistic", "uniform"), ("arcsine", "student5")])
    def test_condition2_converges(self, f, G):
        report = verify_condition2(SkewAlternative.from_names(f, G, 0.0), grid_points=65)
        assert report.converging
        assert report.values[-1] < report.values[0]

    def test_condition2_normal_at_small_theta(self):
        report = verify_condition2(SkewAlternative.from_names("normal", "normal", 0.0), (1e-2,), 129)
        assert report.values[0] < 1e-2

    @pytest.mark.parametrize("f,G", [("normal", "logistic"), ("uniform", "uniform")])
    def test_condition3_tends_to_one(self, f, G):
        report = verify_condition3(SkewAlternative.from_names(f, G, 0.0))
        assert report.converging
        assert report.values[-1] == pytest.approx(1.0, abs=1e-5)
