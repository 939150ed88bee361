"""
Analytic efficiency commands: table1, eigen, lao
"""

import click

from ...core.calculators.local_efficiency import eigen_constants, lao_check
from ...core.formatters.report_formatter import render_eigen, render_lao, render_table1
from ...core.models.enums import CellStatus, OutputFormat, StatisticKind
from ...core.services.table_service import efficiency_table
from ...core.utils.validation import parse_statistic
from ...data import DENSITY_ORDER
from ...exceptions import handle_cli_errors, GofCLIArgumentError, GofVerificationFailed
from ..formatters.output_formatters import emit, status
from ..validators.cli_validators import validate_cli_density


@click.command('table1')
@click.option('--tolerance', type=float, default=None,
              help='Allowed |computed - printed| per cell (default 5e-4)')
@click.option('--strict', is_flag=True,
              help='Also fail on last-digit and documented-discrepancy cells')
@click.option('--latex', is_flag=True, help='Shortcut for --format latex')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def table1(ctx, tolerance, strict, latex, output):
    """Local Bahadur efficiencies of the eight statistics at five densities"""
    if tolerance is not None and tolerance <= 0:
        raise GofCLIArgumentError("Tolerance must be positive", argument="tolerance",
                                  expected_type="float > 0")
    config = ctx.obj['config']
    fmt = OutputFormat.LATEX if latex else ctx.obj['output_format']

    report = efficiency_table(config, tolerance)
    emit(render_table1(report, fmt), output)

    failing = report.mismatches
    if strict:
        failing = [c for c in report.cells if c.status is not CellStatus.MATCH]
    if failing:
        raise GofVerificationFailed(
            f"{len(failing)} of {len(report.cells)} cells differ from the printed table",
            failed_checks=[f"{c.kind.value}/{c.density} ({c.status.value}, diff {c.difference:+.5f})"
                           for c in failing],
        )


@click.command('eigen')
@click.option('--count', type=click.IntRange(1, 50), default=10, show_default=True,
              help='Number of roots of tan(x) + tanh(x) = 0')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def eigen(ctx, count, output):
    """Roots kappa_j of tan(x) + tanh(x) = 0 and mu0 = kappa_1^4"""
    emit(render_eigen(eigen_constants(count), ctx.obj['output_format']), output)


@click.command('lao')
@click.option('--statistic', 'statistics', multiple=True,
              type=click.Choice(StatisticKind.names(), case_sensitive=False),
              help='Statistic to check (repeatable; default Dbar, W1bar, W2bar, U2bar)')
@click.option('--density', 'densities', multiple=True, help='Density name (repeatable; default all)')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def lao(ctx, statistics, densities, output):
    """Local asymptotic optimality of the integrated statistics"""
    kinds = [parse_statistic(s) for s in statistics]
    kinds = kinds or [StatisticKind.DBAR, StatisticKind.W1BAR, StatisticKind.W2BAR, StatisticKind.U2BAR]
    names = list(densities) or list(DENSITY_ORDER)

    reports = [lao_check(k, validate_cli_density(d)) for k in kinds for d in names]
    emit(render_lao(reports, ctx.obj['output_format']), output)
    found = sum(r.is_lao for r in reports)
    status(f"{found} locally asymptotically optimal combination(s)")
