import csv
import io
import json

import numpy as np
import pytest

from skewgof.core.calculators.gof_statistics import all_stats, pit
from skewgof.core.calculators.distributions import make_density
from skewgof.core.calculators.local_efficiency import eigen_constants, table1
from skewgof.core.formatters.report_formatter import (
    TABLE1_CSV_COLUMNS,
    render,
    render_null_tables,
    render_statistics,
    render_table1,
    render_verification,
)
from skewgof.core.models.enums import OutputFormat, StatisticKind
from skewgof.core.models.reports import VerificationReport
from skewgof.core.services.montecarlo import table_from_values
from skewgof.data import STATISTIC_TITLES_LATEX
from skewgof.exceptions import GofFormatError


@pytest.fixture(scope="module")
def report():
    return table1()


@pytest.fixture
def verification():
    report = VerificationReport("eigen")
    report.add("mu0", True, "12.3624 vs 12.362", value=12.3624, expected=12.362)
    report.add("kappa1 bracket", False, "outside")
    return report


class TestTable1Rendering:
    """Test the four renderings of the efficiency table"""

    def test_csv(self, report):
        rows = list(csv.DictReader(io.StringIO(render_table1(report, OutputFormat.CSV))))
        assert len(rows) == 40
        assert tuple(rows[0]) == TABLE1_CSV_COLUMNS
        cell = next(r for r in rows if r["statistic"] == "W2bar" and r["density"] == "uniform")
        assert float(cell["efficiency"]) == pytest.approx(0.968, abs=5e-4)

    def test_json(self, report):
        data = json.loads(render_table1(report, OutputFormat.JSON))
        assert data["schema_version"] == 1
        assert len(data["cells"]) == 40
        for key in ("sup_q", "int_qf", "int_q2f", "variance", "index", "printed", "status"):
            assert key in data["cells"][0]
        assert len(data["notes"]) == 2

    def test_latex(self, report):
        text = render_table1(report, OutputFormat.LATEX)
        assert r"\begin{tabular}{lccccc}" in text
        rows = [line for line in text.splitlines()
                if any(line.startswith(title) for title in STATISTIC_TITLES_LATEX.values())]
        assert len(rows) == 8
        assert all(line.endswith(r"\\") for line in rows)
        assert text.splitlines()[-1].startswith("% ")

    def test_text_marks_discrepancy(self, report):
        text = render_table1(report, OutputFormat.TEXT)
        assert "U2/arcsine: discrepancy" in text
        assert text.splitlines()[0].startswith("Local Bahadur efficiencies")

    def test_text_lists_notes(self, report):
        text = render_table1(report, OutputFormat.TEXT)
        footer = text.split("Notes:", 1)[1]
        assert "1/(3 pi)" in footer
        assert footer.count("  - ") == 2

    def test_dispatch_accepts_strings(self, report):
        assert render(report, "csv") == render_table1(report, OutputFormat.CSV)


class TestOtherRenderings:
    """Test statistics, null table and verification rendering"""

    def test_statistics_csv(self):
        results = all_stats(pit(np.array([-0.3, 0.1, 0.8]), make_density("normal")))
        rows = list(csv.reader(io.StringIO(render_statistics(results, OutputFormat.CSV))))
        assert rows[0] == ["kind", "n", "value"]
        assert [r[0] for r in rows[1:]] == [k.value for k in StatisticKind]

    def test_statistics_latex_unsupported(self):
        with pytest.raises(GofFormatError) as exc_info:
            render_statistics([], OutputFormat.LATEX)
        assert exc_info.value.details["format_type"] == "latex"

    def test_null_table_csv(self):
        table = table_from_values(StatisticKind.W1, np.arange(-500.0, 501.0), n=20, seed=1)
        rows = list(csv.DictReader(io.StringIO(render_null_tables([table], OutputFormat.CSV))))
        assert len(rows) == len(table.levels)
        upper = {float(r["probability"]): float(r["upper"]) for r in rows}
        assert upper[0.95] == pytest.approx(450.0)

    def test_verification_text(self, verification):
        lines = render_verification(verification, OutputFormat.TEXT).splitlines()
        assert lines[0].startswith("PASS  mu0")
        assert lines[1].startswith("FAIL  kappa1 bracket")
        assert lines[-1] == "eigen: 1/2 passed"

    def test_verification_json(self, verification):
        data = json.loads(render(verification, OutputFormat.JSON))
        assert data["passed"] is False
        assert data["checks"][0]["value"] == 12.3624

    def test_eigen_csv(self):
        rows = list(csv.reader(io.StringIO(render(eigen_constants(3), OutputFormat.CSV))))
        assert rows[0] == ["j", "kappa", "residual"]
        assert len(rows) == 4

    def test_unknown_report_type(self):
        with pytest.raises(GofFormatError):
            render(object(), OutputFormat.TEXT)
