import json
import logging
from pathlib import Path

import numpy as np
import pytest
from scipy import stats

from skewgof import __version__
from skewgof.config import GofConfig
from skewgof.core.calculators.distributions import make_density
from skewgof.core.calculators.gof_statistics import statistic_values
from skewgof.core.calculators.skew_model import SkewAlternative, sample
from skewgof.core.models.enums import Alternative, StatisticKind
from skewgof.core.models.reports import NullTable, level_key
from skewgof.core.services.cache_service import NullTableCache
from skewgof.core.services.montecarlo import (
    critical_value_for,
    null_table,
    null_tables,
    power,
    power_curve,
    replicate_rng,
    simulate_null,
    table_from_values,
    table_levels,
    verify_b_convergence,
)
from skewgof.core.services.table_service import resolve_null_tables, run_test
from skewgof.exceptions import GofDependencyError, GofDomainError, GofValidationError


@pytest.fixture
def linear_table():
    return table_from_values(StatisticKind.W1, np.arange(-500.0, 501.0), n=20, seed=1)


@pytest.fixture
def config(tmp_path):
    return GofConfig(replicates=1000, cache_dir=str(tmp_path / "cache"))


class TestSeeding:
    """Test per-replicate random streams"""

    def test_replicate_rng_is_deterministic(self):
        a = replicate_rng(5, 0, 17).random(4)
        b = replicate_rng(5, 0, 17).random(4)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, replicate_rng(5, 0, 18).random(4))

    def test_results_independent_of_workers(self):
        kinds = [StatisticKind.D, StatisticKind.W2BAR]
        serial = simulate_null(kinds, 15, 200, seed=3, workers=1)
        threaded = simulate_null(kinds, 15, 200, seed=3, workers=4)
        for kind in kinds:
            assert np.array_equal(serial[kind], threaded[kind])

    def test_density_pit_matches_uniform_law(self):
        values = simulate_null([StatisticKind.W2], 30, 300, seed=4, density=make_density("logistic"))
        assert values[StatisticKind.W2].shape == (300,)
        assert np.all(values[StatisticKind.W2] > 0.0)


class TestNullTables:
    """Test empirical quantiles and critical values"""

    def test_quantiles(self, linear_table):
        # type-7 quantile of 1001 equally spaced values
        assert linear_table.upper[0.95] == pytest.approx(450.0)
        assert linear_table.lower[0.95] == pytest.approx(-450.0)
        assert linear_table.absolute[0.95] == pytest.approx(475.0)

    def test_critical_values_by_alternative(self, linear_table):
        assert linear_table.critical_value(0.05, Alternative.GREATER) == pytest.approx(450.0)
        assert linear_table.critical_value(0.05, Alternative.LESS) == pytest.approx(-450.0)
        assert linear_table.critical_value(0.05, Alternative.TWO_SIDED) == pytest.approx(475.0)

    def test_rejects(self, linear_table):
        assert linear_table.rejects(460.0, 0.05, Alternative.GREATER)
        assert not linear_table.rejects(-460.0, 0.05, Alternative.GREATER)
        assert linear_table.rejects(-460.0, 0.05, Alternative.LESS)
        assert linear_table.rejects(-480.0, 0.05, Alternative.TWO_SIDED)
        assert not linear_table.rejects(470.0, 0.05, Alternative.TWO_SIDED)

    def test_table_levels(self):
        assert table_levels() == [0.9, 0.95, 0.99]
        assert table_levels([0.025]) == [0.9, 0.95, level_key(0.975), 0.99]

    def test_serialization(self, linear_table):
        data = json.loads(json.dumps(linear_table.to_dict()))
        assert data["schema_version"] == 1
        assert NullTable.from_dict(data) == linear_table
        assert data["package_version"] == __version__

    def test_power_curve_records_version(self, linear_table):
        normal = make_density("normal")
        curve = power_curve(StatisticKind.W1, normal, normal, [0.0], 20, 0.05, 100, seed=2, table=linear_table)
        data = curve.to_dict()
        assert data["package_version"] == __version__
        assert data["points"][0]["theta"] == 0.0

    def test_too_few_replicates(self):
        with pytest.raises(GofValidationError):
            null_table(StatisticKind.D, 10, 999, seed=1)

    def test_missing_table(self):
        with pytest.raises(GofDependencyError):
            critical_value_for(None, StatisticKind.D, 10, 0.05, Alternative.GREATER)

    def test_table_for_other_sample_size(self, linear_table):
        with pytest.raises(GofDependencyError):
            critical_value_for(linear_table, StatisticKind.W1, 21, 0.05, Alternative.GREATER)

    def test_missing_level(self, linear_table):
        with pytest.raises(GofDependencyError):
            critical_value_for(linear_table, StatisticKind.W1, 20, 0.2, Alternative.GREATER)

    def test_shared_simulation(self):
        tables = null_tables([StatisticKind.D, StatisticKind.DBAR], 10, 1000, seed=7)
        assert tables[StatisticKind.D].replicates == 1000
        # sup |A_n| <= sup |alpha_n|
        assert tables[StatisticKind.DBAR].upper[0.95] < tables[StatisticKind.D].upper[0.95]


class TestCache:
    """Test the on-disk null table cache"""

    def test_store_and_load(self, tmp_path, linear_table):
        cache = NullTableCache(tmp_path)
        levels = linear_table.levels
        path = cache.store(linear_table, levels)
        assert path.exists()
        loaded = cache.load(StatisticKind.W1, 20, linear_table.replicates, 1, levels)
        assert loaded == linear_table

    def test_key_depends_on_parameters(self):
        base = NullTableCache.key(StatisticKind.D, 10, 1000, 1, [0.95])
        assert base != NullTableCache.key(StatisticKind.D, 10, 1000, 2, [0.95])
        assert base != NullTableCache.key(StatisticKind.D, 11, 1000, 1, [0.95])

    def test_disabled_cache(self, tmp_path, linear_table):
        cache = NullTableCache(tmp_path, enabled=False)
        assert cache.store(linear_table, linear_table.levels) is None
        assert cache.load(StatisticKind.W1, 20, linear_table.replicates, 1, linear_table.levels) is None

    def test_corrupt_entry_is_ignored(self, tmp_path, linear_table):
        cache = NullTableCache(tmp_path)
        path = cache.path_for(StatisticKind.W1, 20, linear_table.replicates, 1, linear_table.levels)
        path.write_text("{not json", encoding="utf-8")
        assert cache.load(StatisticKind.W1, 20, linear_table.replicates, 1, linear_table.levels) is None

    def test_unwritable_cache_warns(self, tmp_path, linear_table, caplog):
        blocker = tmp_path / "not-a-dir"
        blocker.write_text("", encoding="utf-8")
        cache = NullTableCache(blocker / "cache")
        with caplog.at_level(logging.WARNING, logger="skewgof"):
            assert cache.store(linear_table, linear_table.levels) is None
        assert "cannot write null table cache" in caplog.text

    def test_resolve_survives_unwritable_cache(self, tmp_path):
        blocker = tmp_path / "not-a-dir"
        blocker.write_text("", encoding="utf-8")
        config = GofConfig(replicates=1000, cache_dir=str(blocker / "cache"))
        tables = resolve_null_tables([StatisticKind.D], 10, config)
        assert tables[StatisticKind.D].n == 10
        assert tables[StatisticKind.D].upper[0.95] > 0.0

    def test_resolve_uses_cache(self, config):
        first = resolve_null_tables([StatisticKind.W2BAR], 12, config)
        second = resolve_null_tables([StatisticKind.W2BAR], 12, config)
        assert first[StatisticKind.W2BAR] == second[StatisticKind.W2BAR]
        assert any(p.name.startswith("nulltable-W2bar-n12") for p in Path(config.cache_dir).iterdir())


class TestRunTest:
    """Test goodness-of-fit decisions on data"""

    def test_decisions(self, config):
        x = make_density("normal").sampler(np.random.default_rng(8), 25)
        decisions = run_test(x, make_density("normal"), "W1,U2bar", config)
        assert [d.kind for d in decisions] == [StatisticKind.W1, StatisticKind.U2BAR]
        assert decisions[0].alternative is Alternative.TWO_SIDED
        assert decisions[1].alternative is Alternative.GREATER
        assert all(d.n == 25 for d in decisions)

    def test_outside_support(self, config):
        with pytest.raises(GofDomainError):
            run_test([0.2, 1.5], make_density("uniform"), "all", config, line_numbers=[1, 2])


@pytest.mark.slow
class TestMonteCarloAcceptance:
    """Seeded acceptance runs"""

    def test_null_rejection_rate(self):
        table = null_table(StatisticKind.U2BAR, 50, 10_000, seed=11)
        a = SkewAlternative.from_names("normal", "normal", 0.0)
        point = power(StatisticKind.U2BAR, a, 50, 0.05, 2000, seed=12, table=table)
        assert point.power == pytest.approx(0.05, abs=3 * point.standard_error + 0.005)

    def test_power_grows_with_theta(self):
        table = null_table(StatisticKind.W2BAR, 100, 5000, seed=13)
        curve = power_curve(StatisticKind.W2BAR, make_density("normal"), make_density("normal"),
                            [0.0, 0.15, 2.0], 100, 0.05, 1000, seed=14, table=table)
        assert curve.powers[0] < curve.powers[1] < curve.powers[2]
        assert curve.powers[2] > 0.95

    def test_skew_normal_data_rejected(self, config):
        a = SkewAlternative.from_names("normal", "normal", 2.0)
        x = sample(a, 10_000, seed=15)
        decision = run_test(x, a.f, "W2bar", config)[0]
        assert decision.reject

    @pytest.mark.parametrize("kind", (StatisticKind.W2BAR, StatisticKind.D))
    def test_b_convergence(self, kind):
        a = SkewAlternative.from_names("normal", "normal", 0.5)
        report = verify_b_convergence(kind, a, (100, 1000, 10000), replicates=200, seed=0)
        assert report.rows[-1].deviation < report.rows[0].deviation
        assert report.final_relative_deviation < 0.05

    @pytest.mark.parametrize("kind", (StatisticKind.W1BAR, StatisticKind.W2BAR))
    def test_normalized_mean_at_large_n(self, kind):
        a = SkewAlternative.from_names("uniform", "uniform", 0.5)
        report = verify_b_convergence(kind, a, (10_000,), replicates=2000, seed=0)
        row = report.rows[0]
        # W2bar / n carries the null mean 1/(30 n)
        offset = 1.0 / (30.0 * row.n) if kind is StatisticKind.W2BAR else 0.0
        assert abs(row.mean - offset - report.b_value) < 3.0 * row.standard_error


class TestReflectedSamples:
    """Test the null laws under u -> 1 - u"""

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_classical_statistics_unchanged(self, seed):
        u = np.sort(replicate_rng(seed).random(40))
        direct = statistic_values(u)
        reflected = statistic_values(np.sort(1.0 - u))
        for kind in (StatisticKind.D, StatisticKind.W2, StatisticKind.U2):
            assert reflected[kind] == pytest.approx(direct[kind], rel=1e-9)
        assert reflected[StatisticKind.W1] == pytest.approx(-direct[StatisticKind.W1], rel=1e-9, abs=1e-12)

    @pytest.mark.slow
    def test_dbar_law_unchanged(self):
        n, replicates = 20, 10_000
        direct = simulate_null([StatisticKind.DBAR], n, replicates, seed=31)[StatisticKind.DBAR]
        reflected = np.array([
            statistic_values(np.sort(1.0 - replicate_rng(32, r).random(n)))[StatisticKind.DBAR]
            for r in range(replicates)
        ])
        assert stats.ks_2samp(direct, reflected).pvalue > 0.01


@pytest.mark.slow
class TestNullLaw:
    """Test that simulated null laws match known values and do not depend on f"""

    def test_kolmogorov_critical_value(self):
        table = null_table(StatisticKind.D, 1000, 100_000, seed=41)
        assert table.upper[0.95] == pytest.approx(1.358, abs=0.02)

    def test_pit_removes_density(self):
        kinds = list(StatisticKind)
        uniform = simulate_null(kinds, 20, 10_000, seed=42)
        normal = simulate_null(kinds, 20, 10_000, seed=43, density=make_density("normal"))
        # 1% family-wise over the eight statistics
        for kind in kinds:
            assert stats.ks_2samp(uniform[kind], normal[kind]).pvalue > 0.01 / len(kinds), kind.value
