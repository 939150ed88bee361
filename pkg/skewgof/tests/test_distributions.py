import math

import numpy as np
import pytest
from scipy import integrate, stats

from skewgof.core.calculators.distributions import (
    all_densities,
    make_density,
    numeric_v_q,
    q,
    v,
)
from skewgof.core.calculators.local_efficiency import density_functionals
from skewgof.core.models.enums import DensityKind
from skewgof.data import DENSITY_ORDER, INT_Q2F, INT_QF, SUP_Q, VARIANCES
from skewgof.exceptions import GofConfigurationError, GofValidationError

UNBOUNDED = ("normal", "logistic", "student5")


class TestRegistry:
    """Test density lookup"""

    def test_all_builtins(self):
        assert [d.name for d in all_densities()] == list(DENSITY_ORDER)

    def test_lookup_is_case_insensitive(self):
        assert make_density("Normal") is make_density(DensityKind.NORMAL)

    def test_unknown_density_lists_valid_names(self):
        with pytest.raises(GofConfigurationError) as exc_info:
            make_density("cauchy")
        assert "student5" in str(exc_info.value)
        assert exc_info.value.config_field == "density"


class TestBuiltinDensities:
    """Test the closed forms of the five built-in densities"""

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_quantile_inverts_cdf(self, name):
        d = make_density(name)
        u = np.linspace(0.01, 0.99, 25)
        assert np.allclose(d.cdf(d.quantile(u)), u, atol=1e-12)

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_centered_cdf(self, name):
        d = make_density(name)
        x = np.linspace(-0.9, 0.9, 19)
        assert np.allclose(d.centered_cdf(x), 2.0 * d.cdf(x) - 1.0, atol=1e-14)
        assert np.allclose(d.centered_cdf(-x), -d.centered_cdf(x), atol=1e-14)

    @pytest.mark.parametrize("name", UNBOUNDED + ("uniform",))
    def test_variance(self, name):
        d = make_density(name)
        lo, hi = d.support
        second, _ = integrate.quad(lambda x: x * x * float(d.pdf(x)), lo, hi)
        assert second == pytest.approx(VARIANCES[name], rel=1e-8)
        assert d.variance == pytest.approx(VARIANCES[name])

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_density_at_zero(self, name):
        d = make_density(name)
        assert d.density_at_zero == pytest.approx(float(d.pdf(0.0)))

    def test_student5_sampler_has_unit_third_variance(self):
        d = make_density("student5")
        draws = d.sampler(np.random.default_rng(0), 400_000)
        assert np.var(draws) == pytest.approx(1.0 / 3.0, rel=0.03)

    def test_student5_is_scaled_t5(self):
        d = make_density("student5")
        x = np.linspace(-4.0, 4.0, 33)
        scale = 1.0 / math.sqrt(5.0)
        np.testing.assert_allclose(d.pdf(x), stats.t(5, scale=scale).pdf(x), rtol=1e-10)
        np.testing.assert_allclose(d.pdf(x), 8.0 / (3.0 * math.pi * (1.0 + x * x) ** 3), rtol=1e-12)
        assert stats.t(5, scale=scale).var() == pytest.approx(d.variance)

    @pytest.mark.parametrize("name", ("arcsine", "uniform"))
    def test_bounded_support(self, name):
        d = make_density(name)
        assert d.is_bounded
        assert list(d.in_support(np.array([-1.0, 0.0, 1.0, 1.5]))) == [True, True, True, False]


class TestVAndQ:
    """Test v(x) = int u f and q(s) = int v f"""

    @pytest.mark.parametrize("name", UNBOUNDED + ("uniform",))
    def test_closed_v_matches_quadrature(self, name):
        d = make_density(name)
        v_num, _ = numeric_v_q(d.pdf, d.support)
        for x in (-2.0, -0.7, 0.0, 0.4, 0.95):
            if not d.in_support(np.array([x]))[0]:
                continue
            assert v(d, x) == pytest.approx(v_num(x), abs=1e-9)

    @pytest.mark.parametrize("name", UNBOUNDED + ("uniform",))
    def test_closed_q_matches_quadrature(self, name):
        d = make_density(name)
        _, q_num = numeric_v_q(d.pdf, d.support)
        for s in (-0.8, 0.0, 0.6):
            assert q(d, s) == pytest.approx(q_num(s), abs=1e-9)

    def test_normal_v_is_minus_density(self):
        d = make_density("normal")
        assert v(d, 0.3) == pytest.approx(-math.exp(-0.045) / math.sqrt(2.0 * math.pi))

    def test_student5_q_limit(self):
        assert q(make_density("student5"), np.inf) == pytest.approx(-35.0 / (72.0 * math.pi))

    def test_q_at_upper_end_is_int_vf(self):
        for d in all_densities():
            int_vf = density_functionals(d).int_vf
            assert q(d, d.support[1]) == pytest.approx(int_vf, abs=1e-10)


class TestFunctionals:
    """Test the functionals entering the local indices"""

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_sup_q(self, name):
        assert density_functionals(make_density(name)).sup_q == pytest.approx(SUP_Q[name], abs=1e-10)

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_int_qf(self, name):
        assert density_functionals(make_density(name)).int_qf == pytest.approx(INT_QF[name], abs=1e-9)

    @pytest.mark.parametrize("name", DENSITY_ORDER)
    def test_int_q2f(self, name):
        # the normal and logistic entries are printed to 5 decimals
        tolerance = 5e-6 if name in ("normal", "logistic") else 1e-9
        assert density_functionals(make_density(name)).int_q2f == pytest.approx(INT_Q2F[name], abs=tolerance)


class TestNumericVQ:
    """Test validation of user supplied densities"""

    def test_asymmetric_density_rejected(self):
        def shifted(x):
            x = np.asarray(x, dtype=float)
            return np.exp(-0.5 * (x - 0.5) ** 2) / math.sqrt(2.0 * math.pi)

        with pytest.raises(GofValidationError):
            numeric_v_q(shifted)

    def test_unnormalized_density_rejected(self):
        def doubled(x):
            x = np.asarray(x, dtype=float)
            return 2.0 * np.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)

        with pytest.raises(GofValidationError):
            numeric_v_q(doubled)

    def test_asymmetric_support_rejected(self):
        with pytest.raises(GofValidationError):
            numeric_v_q(make_density("uniform").pdf, (-1.0, 2.0))

    def test_triangular_density(self):
        def triangle(x):
            x = np.asarray(x, dtype=float)
            return np.clip(1.0 - np.abs(x), 0.0, None)

        v_func, q_func = numeric_v_q(triangle, (-1.0, 1.0))
        # v(0) = -int_0^1 u (1 - u) du = -1/6
        assert v_func(0.0) == pytest.approx(-1.0 / 6.0, abs=1e-10)
        assert v_func(1.0) == 0.0
        assert q_func(-1.0) == 0.0
