"""
Verification suites: each runs a group of numerical checks of the engine
and returns a VerificationReport with one pass/fail entry per check.
"""

import logging
import math
from typing import Sequence, Union

import numpy as np

from ...config import GofConfig
from ...data import MU0, KAPPA1, DENSITY_ORDER
from ..calculators.distributions import make_density
from ..calculators.gof_statistics import grid_oracle, integrated_process, statistic_values
from ..calculators.local_efficiency import (
    eigen_constants,
    lao_check,
    local_index,
    richardson,
    slope_ratio,
)
from ..calculators.skew_model import SkewAlternative, verify_condition2, verify_condition3
from ..models.enums import StatisticKind, VerificationSuite
from ..models.reports import VerificationReport
from ..models.samples import SortedSample
from ...exceptions import GofConfigurationError

logger = logging.getLogger(__name__)

SLOPE_THETAS = (1e-1, 1e-2, 1e-3)


def verify_eigen(config: GofConfig, count: int = 10) -> VerificationReport:
    report = VerificationReport("eigen")
    constants = eigen_constants(count)
    report.add("mu0", abs(constants.mu0 - MU0) < config.eigen_tolerance,
               f"mu0 = {constants.mu0:.6f}", constants.mu0, MU0)
    report.add("kappa1", abs(constants.kappa[0] - KAPPA1) < 5e-6,
               f"kappa1 = {constants.kappa[0]:.9f}", constants.kappa[0], KAPPA1)
    for j, (k, res) in enumerate(zip(constants.kappa, constants.residuals), start=1):
        inside = (j - 0.5) * math.pi < k < j * math.pi
        report.add(f"kappa{j} residual", res < 1e-12 and inside,
                   f"kappa{j} = {k:.12f}, |tan + tanh| = {res:.1e}", res, 0.0)
    return report


def verify_lao(config: GofConfig) -> VerificationReport:
    report = VerificationReport("lao")
    uniform, arcsine = make_density("uniform"), make_density("arcsine")

    dbar = lao_check(StatisticKind.DBAR, uniform)
    report.add("Dbar LAO at uniform", dbar.is_lao, f"efficiency {dbar.efficiency:.12f}",
               dbar.efficiency, 1.0)
    report.add("uniform linearity residual", dbar.residual < 1e-10, f"{dbar.residual:.2e}",
               dbar.residual, 0.0)

    u2bar = lao_check(StatisticKind.U2BAR, arcsine)
    report.add("U2bar LAO at arcsine", u2bar.is_lao, f"efficiency {u2bar.efficiency:.12f}",
               u2bar.efficiency, 1.0)
    report.add("arcsine residual", u2bar.residual < 1e-10, f"{u2bar.residual:.2e}",
               u2bar.residual, 0.0)

    for name in DENSITY_ORDER:
        d = make_density(name)
        w1bar = lao_check(StatisticKind.W1BAR, d)
        report.add(f"W1bar not LAO at {name}", not w1bar.is_lao and w1bar.efficiency < 1.0,
                   f"efficiency {w1bar.efficiency:.6f}", w1bar.efficiency)
        others = [local_index(k, d).efficiency for k in StatisticKind]
        report.add(f"Bahadur bound at {name}", max(others) <= 1.0 + 1e-9,
                   f"max efficiency {max(others):.12f}", max(others), 1.0)
    return report


def verify_conditions(
    config: GofConfig,
    theta_grid: Sequence[float] = SLOPE_THETAS,
    grid_points: int = 129,
) -> VerificationReport:
    report = VerificationReport("conditions")
    for f_name in DENSITY_ORDER:
        for g_name in DENSITY_ORDER:
            a = SkewAlternative.from_names(f_name, g_name, 0.0)
            c2 = verify_condition2(a, theta_grid, grid_points)
            report.add(f"condition2 {f_name}/{g_name}", c2.converging,
                       "sup/theta: " + ", ".join(f"{v:.2e}" for v in c2.values), c2.values[-1], 0.0)
            c3 = verify_condition3(a, theta_grid)
            report.add(f"condition3 {f_name}/{g_name}",
                       c3.converging and abs(c3.values[-1] - 1.0) < 1e-4,
                       "K/limit: " + ", ".join(f"{v:.8f}" for v in c3.values), c3.values[-1], 1.0)

    spot = verify_condition2(SkewAlternative.from_names("normal", "normal", 0.0), (1e-2,), grid_points)
    report.add("condition2 normal/normal at theta=0.01", spot.values[0] < 1e-2,
               f"{spot.values[0]:.2e}", spot.values[0], 0.0)
    return report


def verify_slopes(
    config: GofConfig,
    thetas: Sequence[float] = SLOPE_THETAS,
    densities: Sequence[str] = ("uniform", "normal"),
    skewing: Sequence[str] = ("normal", "logistic"),
    tolerance: float = 1e-3,
) -> VerificationReport:
    """c(T, theta) / 2K(theta) extrapolated to theta = 0 against the analytic efficiency."""
    report = VerificationReport("slopes")
    for f_name in densities:
        f = make_density(f_name)
        for kind in StatisticKind:
            target = local_index(kind, f).efficiency
            at_small = []
            for g_name in skewing:
                a = SkewAlternative(f, make_density(g_name), thetas[0])
                ratios = [slope_ratio(kind, a.with_theta(t)) for t in thetas]
                limit = richardson(thetas, ratios)
                at_small.append(ratios[len(ratios) // 2])
                report.add(f"{kind.value} {f_name}/{g_name}", abs(limit - target) < tolerance,
                           f"ratios {', '.join(f'{r:.6f}' for r in ratios)} -> {limit:.6f}",
                           limit, target)
            spread = max(at_small) - min(at_small)
            report.add(f"{kind.value} {f_name} G-invariance", spread < 1e-2,
                       f"spread at theta={thetas[len(thetas) // 2]:g}: {spread:.2e}", spread, 0.0)
    return report


def verify_statistics(
    config: GofConfig,
    samples: int = 1000,
    max_n: int = 50,
    grid_points: int = 100_001,
) -> VerificationReport:
    """Exact integrated statistics against a grid oracle, plus A_n(1) = W1 and a direct W1bar."""
    report = VerificationReport("statistics")
    rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(9,)))
    worst = {k: 0.0 for k in (StatisticKind.DBAR, StatisticKind.W1BAR, StatisticKind.W2BAR,
                              StatisticKind.U2BAR)}
    identity_gap = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        s = SortedSample.from_unsorted(rng.random(n))
        exact = statistic_values(s.values)
        oracle = grid_oracle(s, grid_points)
        for k in worst:
            worst[k] = max(worst[k], abs(exact[k] - oracle[k]))
        u = s.values
        w1bar_direct = math.sqrt(n) * (0.5 * float(np.mean((1.0 - u) ** 2)) - 1.0 / 6.0)
        identity_gap = max(
            identity_gap,
            abs(float(integrated_process(s).evaluate(1.0)) - exact[StatisticKind.W1]),
            abs(w1bar_direct - exact[StatisticKind.W1BAR]),
        )

    report.add("Dbar vs grid", worst[StatisticKind.DBAR] < 1e-6, f"{worst[StatisticKind.DBAR]:.2e}",
               worst[StatisticKind.DBAR], 0.0)
    for k in (StatisticKind.W1BAR, StatisticKind.W2BAR, StatisticKind.U2BAR):
        report.add(f"{k.value} vs grid", worst[k] < 1e-8, f"{worst[k]:.2e}", worst[k], 0.0)
    report.add("endpoint and mean identities", identity_gap < 1e-10, f"{identity_gap:.2e}", identity_gap, 0.0)
    return report


_SUITES = {
    VerificationSuite.CONDITIONS: verify_conditions,
    VerificationSuite.SLOPES: verify_slopes,
    VerificationSuite.LAO: verify_lao,
    VerificationSuite.EIGEN: verify_eigen,
    VerificationSuite.STATISTICS: verify_statistics,
}


def run_suite(suite: Union[str, VerificationSuite], config: GofConfig) -> VerificationReport:
    if isinstance(suite, str):
        try:
            suite = VerificationSuite(suite)
        except ValueError:
            raise GofConfigurationError(
                f"Unknown verification suite: {suite}",
                config_field="suite",
                valid_values=VerificationSuite.names(),
            )
    logger.info(f"running verification suite {suite.value}")
    return _SUITES[suite](config)
