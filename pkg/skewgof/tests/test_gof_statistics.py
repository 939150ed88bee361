import math

import numpy as np
import pytest

from skewgof.core.calculators.distributions import make_density
from skewgof.core.calculators.gof_statistics import (
    classical_values,
    compute,
    grid_oracle,
    integrated_process,
    integrated_stats,
    load_sample,
    pit,
    statistic_values,
)
from skewgof.core.models.enums import StatisticKind
from skewgof.core.models.samples import SortedSample
from skewgof.exceptions import GofDomainError, GofFileError, GofValidationError


class TestSortedSample:
    """Test SortedSample validation"""

    def test_from_unsorted_sorts(self):
        s = SortedSample.from_unsorted([0.7, 0.1, 0.4])
        assert list(s.values) == [0.1, 0.4, 0.7]
        assert s.n == 3

    def test_values_are_read_only(self):
        s = SortedSample.from_unsorted([0.2, 0.3])
        with pytest.raises(ValueError):
            s.values[0] = 0.5

    @pytest.mark.parametrize("values", [[], [0.5, 1.2], [-0.1, 0.3], [0.2, np.nan]])
    def test_invalid_samples(self, values):
        with pytest.raises(GofValidationError):
            SortedSample.from_unsorted(values)

    def test_unsorted_input_rejected(self):
        with pytest.raises(GofValidationError):
            SortedSample(np.array([0.4, 0.1]))


class TestSinglePoint:
    """n = 1, u = [1/2]: every statistic has a closed form"""

    @pytest.fixture
    def values(self):
        return statistic_values(np.array([0.5]))

    def test_classical(self, values):
        assert values[StatisticKind.D] == pytest.approx(0.5)
        assert values[StatisticKind.W1] == pytest.approx(0.0, abs=1e-15)
        assert values[StatisticKind.W2] == pytest.approx(1.0 / 12.0)
        assert values[StatisticKind.U2] == pytest.approx(1.0 / 12.0)

    def test_integrated(self, values):
        assert values[StatisticKind.DBAR] == pytest.approx(0.125, abs=1e-14)
        assert values[StatisticKind.W1BAR] == pytest.approx(-1.0 / 24.0, abs=1e-14)
        assert values[StatisticKind.W2BAR] == pytest.approx(1.0 / 320.0, abs=1e-14)
        assert values[StatisticKind.U2BAR] == pytest.approx(1.0 / 720.0, abs=1e-14)

    def test_process_endpoints(self):
        process = integrated_process(SortedSample.from_unsorted([0.5]))
        assert process.segments == 2
        assert float(process.evaluate(0.0)) == pytest.approx(0.0, abs=1e-15)
        assert float(process.evaluate(1.0)) == pytest.approx(0.0, abs=1e-15)
        assert float(process.evaluate(0.5)) == pytest.approx(-0.125)


class TestClassicalStatistics:
    """Test the classical statistics"""

    def test_kolmogorov_matches_scipy(self):
        from scipy import stats
        rng = np.random.default_rng(3)
        u = np.sort(rng.random(40))
        d, _, _, _ = classical_values(u)
        assert d == pytest.approx(math.sqrt(40) * stats.kstest(u, "uniform").statistic, rel=1e-12)

    def test_cramer_von_mises_matches_scipy(self):
        from scipy import stats
        rng = np.random.default_rng(4)
        u = np.sort(rng.random(25))
        _, _, w2, _ = classical_values(u)
        assert w2 == pytest.approx(stats.cramervonmises(u, "uniform").statistic, rel=1e-10)

    def test_watson_is_nonnegative_and_below_cramer_von_mises(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            _, w1, w2, u2 = classical_values(np.sort(rng.random(30)))
            assert 0.0 <= u2 <= w2
            assert u2 == pytest.approx(w2 - w1 * w1)


class TestIntegratedStatistics:
    """Test the exact integrated statistics"""

    @pytest.fixture
    def samples(self):
        rng = np.random.default_rng(11)
        return [SortedSample.from_unsorted(rng.random(int(n))) for n in rng.integers(1, 30, size=25)]

    def test_process_at_one_equals_w1(self, samples):
        for s in samples:
            values = statistic_values(s.values)
            assert float(integrated_process(s).evaluate(1.0)) == pytest.approx(
                values[StatisticKind.W1], abs=1e-12)

    def test_w1bar_direct_formula(self, samples):
        for s in samples:
            direct = math.sqrt(s.n) * (0.5 * float(np.mean((1.0 - s.values) ** 2)) - 1.0 / 6.0)
            assert statistic_values(s.values)[StatisticKind.W1BAR] == pytest.approx(direct, abs=1e-12)

    def test_against_grid_oracle(self, samples):
        for s in samples[:10]:
            exact = statistic_values(s.values)
            oracle = grid_oracle(s, points=20_001)
            assert exact[StatisticKind.DBAR] == pytest.approx(oracle[StatisticKind.DBAR], abs=1e-6)
            for kind in (StatisticKind.W1BAR, StatisticKind.W2BAR, StatisticKind.U2BAR):
                assert exact[kind] == pytest.approx(oracle[kind], abs=1e-7)

    def test_ordering(self, samples):
        for s in samples:
            values = statistic_values(s.values)
            assert values[StatisticKind.DBAR] >= abs(values[StatisticKind.W1BAR]) - 1e-14
            assert values[StatisticKind.W2BAR] <= values[StatisticKind.DBAR] ** 2 + 1e-14
            assert values[StatisticKind.U2BAR] >= -1e-14

    def test_ties_are_allowed(self):
        s = SortedSample.from_unsorted([0.3, 0.3, 0.3, 0.8])
        results = integrated_stats(integrated_process(s))
        assert all(np.isfinite(r.value) for r in results)

    def test_evaluate_outside_unit_interval(self):
        process = integrated_process(SortedSample.from_unsorted([0.2, 0.6]))
        with pytest.raises(GofValidationError):
            process.evaluate(1.5)

    def test_compute_keeps_requested_order(self):
        s = SortedSample.from_unsorted([0.1, 0.5, 0.9])
        results = compute([StatisticKind.U2BAR, StatisticKind.D], s)
        assert [r.kind for r in results] == [StatisticKind.U2BAR, StatisticKind.D]


class TestPit:
    """Test the probability integral transform"""

    def test_pit_sorts_and_transforms(self):
        s = pit([0.5, -0.5, 0.0], make_density("uniform"))
        assert list(s.values) == pytest.approx([0.25, 0.5, 0.75])

    def test_outside_support_names_index_and_line(self):
        with pytest.raises(GofDomainError) as exc_info:
            pit([0.1, 1.5], make_density("uniform"), line_numbers=[3, 7])
        assert exc_info.value.index == 1
        assert exc_info.value.line_number == 7
        assert "7" in str(exc_info.value)


class TestLoadSample:
    """Test reading observations from files"""

    def test_one_value_per_line(self, tmp_path):
        path = tmp_path / "data.txt"
        path.write_text("# header\n0.5\n\n-1.25  # trailing\n2\n", encoding="utf-8")
        values, lines = load_sample(path)
        assert list(values) == [0.5, -1.25, 2.0]
        assert lines == [2, 4, 5]

    def test_csv_column(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("id,x\n1,0.25\n2,0.75\n", encoding="utf-8")
        values, lines = load_sample(path, column="x")
        assert list(values) == [0.25, 0.75]
        assert lines == [2, 3]

    def test_missing_column(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("id,x\n1,0.25\n", encoding="utf-8")
        with pytest.raises(GofValidationError):
            load_sample(path, column="y")

    def test_bad_number(self, tmp_path):
        path = tmp_path / "data.txt"
        path.write_text("0.1\nabc\n", encoding="utf-8")
        with pytest.raises(GofValidationError) as exc_info:
            load_sample(path)
        assert "line 2" in str(exc_info.value)

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "data.txt"
        path.write_bytes(b"0.1\n0.2\n\xff\xfe0.3\n")
        with pytest.raises(GofFileError) as exc_info:
            load_sample(path)
        assert "not UTF-8" in str(exc_info.value)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing\n", encoding="utf-8")
        with pytest.raises(GofValidationError):
            load_sample(path)
