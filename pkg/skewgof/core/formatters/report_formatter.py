"""
Text, CSV, JSON and LaTeX rendering of the engine's reports.

Every renderer takes a report object and an OutputFormat and returns a
string; the CLI only decides where the string goes.
"""

import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence, Union

from ...data import DENSITY_TITLES, STATISTIC_TITLES_LATEX
from ..models.enums import CellStatus, OutputFormat
from ..models.reports import (
    SCHEMA_VERSION,
    ConvergenceReport,
    EigenConstants,
    LaoReport,
    NullTable,
    PowerCurve,
    Table1Report,
    TestDecision,
    VerificationReport,
)
from ..models.samples import StatisticResult
from ...exceptions import GofFormatError

TABLE1_CSV_COLUMNS = ("statistic", "density", "index", "variance", "efficiency")

_STATUS_MARKS = {
    CellStatus.MATCH: " ",
    CellStatus.LAST_DIGIT: "~",
    CellStatus.DISCREPANCY: "!",
    CellStatus.MISMATCH: "X",
}


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _unsupported(fmt: OutputFormat, what: str) -> GofFormatError:
    return GofFormatError(f"{what} cannot be rendered as {fmt.value}", format_type=fmt.value)


# efficiency table

def table1_text(report: Table1Report) -> str:
    width = 12
    lines = ["Local Bahadur efficiencies (computed / printed)", ""]
    header = f"{'':<8}" + "".join(f"{DENSITY_TITLES.get(d, d):>{width * 2}}" for d in report.densities)
    lines.append(header)
    for kind in report.statistics:
        row = f"{kind.value:<8}"
        for density in report.densities:
            cell = report.cell(kind, density)
            mark = _STATUS_MARKS[cell.status]
            row += f"{cell.efficiency:>{width}.5f}{cell.printed:>{width - 2}.3f} {mark}"
        lines.append(row)
    lines.append("")
    lines.append(f"tolerance {report.tolerance:g}; ~ last digit, ! documented discrepancy, X mismatch")
    for cell in report.cells:
        if cell.status is not CellStatus.MATCH:
            lines.append(f"  {cell.kind.value}/{cell.density}: {cell.status.value}"
                         f" (diff {cell.difference:+.5f}){': ' + cell.note if cell.note else ''}")
    if report.notes:
        lines.append("")
        lines.append("Notes:")
        lines += [f"  - {note}" for note in report.notes]
    return "\n".join(lines)


def table1_csv(report: Table1Report) -> str:
    rows = [
        (c.kind.value, c.density, repr(c.report.index), repr(c.report.variance), repr(c.efficiency))
        for c in report.cells
    ]
    return _csv(TABLE1_CSV_COLUMNS, rows)


def table1_latex(report: Table1Report) -> str:
    columns = "l" + "c" * len(report.densities)
    lines = [
        r"\begin{table}[ht]",
        r"\centering",
        rf"\begin{{tabular}}{{{columns}}}",
        r"\hline",
        "Statistic & " + " & ".join(DENSITY_TITLES.get(d, d) for d in report.densities) + r" \\",
        r"\hline",
    ]
    for kind in report.statistics:
        cells = " & ".join(f"{report.cell(kind, d).efficiency:.3f}" for d in report.densities)
        lines.append(f"{STATISTIC_TITLES_LATEX[kind.value]} & {cells} " + r"\\")
    lines += [
        r"\hline",
        r"\end{tabular}",
        r"\caption{Local Bahadur efficiencies under skew alternatives}",
        r"\end{table}",
    ]
    lines += [f"% {note}" for note in report.notes]
    return "\n".join(lines)


def render_table1(report: Table1Report, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return table1_csv(report)
    if fmt is OutputFormat.JSON:
        return to_json(report.to_dict())
    if fmt is OutputFormat.LATEX:
        return table1_latex(report)
    return table1_text(report)


# statistics and decisions

def render_statistics(results: Sequence[StatisticResult], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, "statistics": [r.to_dict() for r in results]})
    if fmt is OutputFormat.CSV:
        return _csv(("kind", "n", "value"), ((r.kind.value, r.n, repr(r.value)) for r in results))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "statistics")
    return "\n".join(f"{r.kind.value:<6} n={r.n:<8} {r.value:.8g}" for r in results)


def render_decisions(decisions: Sequence[TestDecision], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, "decisions": [d.to_dict() for d in decisions]})
    if fmt is OutputFormat.CSV:
        return _csv(
            ("kind", "n", "value", "critical_value", "level", "alternative", "reject"),
            ((d.kind.value, d.n, repr(d.value), repr(d.critical_value), d.level,
              d.alternative.value, d.reject) for d in decisions),
        )
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "test decisions")
    lines = []
    for d in decisions:
        verdict = "REJECT" if d.reject else "accept"
        lines.append(f"{d.kind.value:<6} {d.value:>12.6f}  critical {d.critical_value:>10.6f}"
                     f"  ({d.alternative.value}, level {d.level:g})  {verdict}")
    return "\n".join(lines)


# Monte Carlo outputs

def render_null_tables(tables: Sequence[NullTable], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, "tables": [t.to_dict() for t in tables]})
    if fmt is OutputFormat.CSV:
        rows: List[Sequence[Any]] = []
        for t in tables:
            for p in t.levels:
                rows.append((t.kind.value, t.n, t.replicates, t.seed, p,
                             repr(t.upper[p]), repr(t.lower[p]), repr(t.absolute[p])))
        return _csv(("kind", "n", "replicates", "seed", "probability", "upper", "lower", "absolute"), rows)
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "null tables")
    lines = []
    for t in tables:
        lines.append(f"{t.kind.value}: n={t.n}, {t.replicates} replicates, seed {t.seed}")
        for p in t.levels:
            lines.append(f"  p={p:<6g} upper {t.upper[p]:>10.6f}  lower {t.lower[p]:>10.6f}"
                         f"  |.| {t.absolute[p]:>10.6f}")
    return "\n".join(lines)


def render_power_curve(curve: PowerCurve, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json(curve.to_dict())
    if fmt is OutputFormat.CSV:
        return _csv(("theta", "power", "standard_error", "rejections"),
                    ((p.theta, repr(p.power), repr(p.standard_error), p.rejections) for p in curve.points))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "power curves")
    lines = [f"{curve.kind.value} power, f={curve.density}, G={curve.skewing}, n={curve.n},"
             f" level {curve.level:g} ({curve.alternative.value})"]
    lines += [f"  theta={p.theta:<8g} power {p.power:.4f} +- {p.standard_error:.4f}" for p in curve.points]
    return "\n".join(lines)


def render_convergence(report: ConvergenceReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json(report.to_dict())
    if fmt is OutputFormat.CSV:
        return _csv(("n", "mean", "std", "standard_error", "deviation"),
                    ((r.n, repr(r.mean), repr(r.std), repr(r.standard_error), repr(r.deviation))
                     for r in report.rows))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "convergence reports")
    lines = [f"{report.kind.value} -> b = {report.b_value:.6g}"
             f" (f={report.density}, G={report.skewing}, theta={report.theta:g})"]
    lines += [f"  n={r.n:<7} mean {r.mean:.6g}  sd {r.std:.4g}  deviation {r.deviation:+.3g}"
              for r in report.rows]
    return "\n".join(lines)


# verification and constants

def render_verification(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json(report.to_dict())
    if fmt is OutputFormat.CSV:
        return _csv(("check", "passed", "value", "expected", "detail"),
                    ((c.name, c.passed, c.value, c.expected, c.detail) for c in report.checks))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "verification reports")
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in report.checks]
    lines.append(f"{report.suite}: {len(report.checks) - len(report.failed)}/{len(report.checks)} passed")
    return "\n".join(lines)


def render_eigen(constants: EigenConstants, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, **constants.to_dict()})
    if fmt is OutputFormat.CSV:
        return _csv(("j", "kappa", "residual"),
                    ((j, repr(k), repr(r)) for j, (k, r) in
                     enumerate(zip(constants.kappa, constants.residuals), start=1)))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "eigen constants")
    lines = [f"mu0 = kappa1^4 = {constants.mu0:.6f}"]
    lines += [f"  kappa{j} = {k:.12f}  |tan + tanh| = {r:.1e}"
              for j, (k, r) in enumerate(zip(constants.kappa, constants.residuals), start=1)]
    return "\n".join(lines)


def render_lao(reports: Sequence[LaoReport], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, "checks": [r.to_dict() for r in reports]})
    if fmt is OutputFormat.CSV:
        return _csv(("statistic", "density", "efficiency", "is_lao", "residual_name", "residual"),
                    ((r.kind.value, r.density, repr(r.efficiency), r.is_lao, r.residual_name or "",
                      "" if r.residual is None else repr(r.residual)) for r in reports))
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "LAO checks")
    lines = []
    for r in reports:
        extra = f", {r.residual_name} residual {r.residual:.2e}" if r.residual is not None else ""
        lines.append(f"{r.kind.value}/{r.density}: efficiency {r.efficiency:.8f}"
                     f"{' (LAO)' if r.is_lao else ''}{extra}")
    return "\n".join(lines)


def render_config(config: Dict[str, Any], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json({"schema_version": SCHEMA_VERSION, "config": config})
    if fmt is OutputFormat.CSV:
        return _csv(("field", "value"), config.items())
    if fmt is OutputFormat.LATEX:
        raise _unsupported(fmt, "configuration")
    return "\n".join(f"{key:<16} {value}" for key, value in config.items())


Renderable = Union[Table1Report, VerificationReport, PowerCurve, ConvergenceReport, EigenConstants]


def render(report: Renderable, fmt: Union[str, OutputFormat]) -> str:
    """Dispatch on the report type"""
    fmt = OutputFormat(fmt) if isinstance(fmt, str) else fmt
    renderers: Dict[type, Any] = {
        Table1Report: render_table1,
        VerificationReport: render_verification,
        PowerCurve: render_power_curve,
        ConvergenceReport: render_convergence,
        EigenConstants: render_eigen,
    }
    renderer = renderers.get(type(report))
    if renderer is None:
        raise GofFormatError(f"No renderer for {type(report).__name__}")
    return renderer(report, fmt)
