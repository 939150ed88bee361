"""
Monte Carlo commands: test, nulltable, power, convergence
"""

import click

from ...core.calculators.gof_statistics import load_sample
from ...core.calculators.skew_model import SkewAlternative
from ...core.formatters.report_formatter import (
    render_convergence,
    render_decisions,
    render_null_tables,
    render_power_curve,
)
from ...core.models.enums import Alternative, StatisticKind
from ...core.services.montecarlo import table_levels, verify_b_convergence
from ...core.services.table_service import resolve_null_tables, run_power_study, run_test
from ...core.utils.validation import (
    parse_statistic,
    parse_statistics,
    validate_level,
    validate_sample_size,
    validate_theta,
    validate_theta_grid,
)
from ...exceptions import handle_cli_errors
from ..formatters.output_formatters import emit, status
from ..validators.cli_validators import (
    parse_cli_float_list,
    parse_cli_int_list,
    validate_cli_density,
    validate_cli_file_path,
)

ALTERNATIVE_CHOICES = [a.value for a in Alternative]


def _statistic_option(default):
    return click.option('--statistic', 'statistic', default=default, show_default=True,
                        help='Statistic name: ' + ', '.join(StatisticKind.names()))


@click.command('test')
@click.argument('input_file', type=click.Path())
@click.option('--density', default='normal', show_default=True, help='Null density f')
@click.option('--statistics', default='all', show_default=True,
              help='Comma separated statistic names, or "all"')
@click.option('--level', type=float, default=None, help='Test size (default from config, 0.05)')
@click.option('--column', default=None, help='CSV column holding the data')
@click.option('--alternative', type=click.Choice(ALTERNATIVE_CHOICES), default=None,
              help='Rejection region (default two-sided for W1/W1bar, greater otherwise)')
@click.option('--replicates', type=int, default=None, help='Null simulation replicates')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def test_command(ctx, input_file, density, statistics, level, column, alternative, replicates, output):
    """Test H0: theta = 0 for the data in INPUT_FILE"""
    validate_cli_file_path(input_file, operation="read")
    f = validate_cli_density(density)
    kinds = parse_statistics(statistics)
    config = ctx.obj['config'].with_overrides(replicates=replicates, level=level)

    values, lines = load_sample(input_file, column)
    status(f"{len(values)} observations read from {input_file}")
    alternatives = {k: Alternative(alternative) for k in kinds} if alternative else None

    decisions = run_test(values, f, kinds, config, alternatives=alternatives, line_numbers=lines)
    emit(render_decisions(decisions, ctx.obj['output_format']), output)


@click.command('nulltable')
@click.option('--statistics', default='all', show_default=True,
              help='Comma separated statistic names, or "all"')
@click.option('--n', 'n', type=int, required=True, help='Sample size')
@click.option('--replicates', type=int, default=None, help='Replicates (at least 1000)')
@click.option('--level', 'levels', type=float, multiple=True,
              help='Extra test size to tabulate (repeatable)')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def nulltable(ctx, statistics, n, replicates, levels, output):
    """Simulated null critical values (cached on disk)"""
    validate_sample_size(n)
    config = ctx.obj['config'].with_overrides(replicates=replicates)
    kinds = parse_statistics(statistics)
    wanted = table_levels([validate_level(a) for a in levels] or [config.level])

    tables = resolve_null_tables(kinds, n, config, wanted)
    emit(render_null_tables([tables[k] for k in kinds], ctx.obj['output_format']), output)


@click.command('power')
@_statistic_option('W2bar')
@click.option('--density', default='normal', show_default=True, help='Base density f')
@click.option('--skewing', default='normal', show_default=True, help='Skewing cdf G')
@click.option('--thetas', default='0,0.1,0.2,0.3,0.5,1', show_default=True,
              help='Comma separated skewness parameters')
@click.option('--n', 'n', type=int, default=100, show_default=True, help='Sample size')
@click.option('--level', type=float, default=None, help='Test size (default from config, 0.05)')
@click.option('--alternative', type=click.Choice(ALTERNATIVE_CHOICES), default=None,
              help='Rejection region')
@click.option('--replicates', type=int, default=None, help='Replicates per theta and for the null table')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def power(ctx, statistic, density, skewing, thetas, n, level, alternative, replicates, output):
    """Empirical power curve under skew alternatives (plot-ready CSV with --format csv)"""
    kind = parse_statistic(statistic)
    f = validate_cli_density(density)
    G = validate_cli_density(skewing, argument="skewing")
    grid = validate_theta_grid(parse_cli_float_list(thetas, "thetas"))
    validate_sample_size(n)
    config = ctx.obj['config'].with_overrides(replicates=replicates)

    curve = run_power_study(kind, f, G, grid, n, config, level,
                            Alternative(alternative) if alternative else None)
    emit(render_power_curve(curve, ctx.obj['output_format']), output)


@click.command('convergence')
@_statistic_option('W2bar')
@click.option('--density', default='normal', show_default=True, help='Base density f')
@click.option('--skewing', default='normal', show_default=True, help='Skewing cdf G')
@click.option('--theta', type=float, default=0.5, show_default=True, help='Skewness parameter')
@click.option('--n-grid', default='100,1000,10000', show_default=True,
              help='Comma separated sample sizes')
@click.option('--replicates', type=int, default=200, show_default=True, help='Replicates per n')
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def convergence(ctx, statistic, density, skewing, theta, n_grid, replicates, output):
    """Normalized statistic under the alternative against its limit b(T, theta)"""
    kind = parse_statistic(statistic)
    a = SkewAlternative(validate_cli_density(density), validate_cli_density(skewing, argument="skewing"),
                        validate_theta(theta))
    config = ctx.obj['config']

    report = verify_b_convergence(kind, a, parse_cli_int_list(n_grid, "n-grid"), replicates,
                                  config.seed, config.workers)
    emit(render_convergence(report, ctx.obj['output_format']), output)
    status(f"relative deviation at n={report.rows[-1].n}: {report.final_relative_deviation:.3g}")
