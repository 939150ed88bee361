"""
Verification command
"""

import click

from ...core.formatters.report_formatter import render_verification
from ...core.models.enums import VerificationSuite
from ...core.services.verification_service import run_suite
from ...exceptions import handle_cli_errors, GofVerificationFailed
from ..formatters.output_formatters import emit


@click.command('verify')
@click.argument('suite', type=click.Choice(VerificationSuite.names()))
@click.option('--output', '-o', type=click.Path(), help='Output file path')
@click.pass_context
@handle_cli_errors
def verify(ctx, suite, output):
    """Run a verification suite and report pass/fail per check"""
    report = run_suite(suite, ctx.obj['config'])
    emit(render_verification(report, ctx.obj['output_format']), output)
    if not report.passed:
        raise GofVerificationFailed(
            f"{len(report.failed)} check(s) failed in suite {suite}",
            failed_checks=report.failed,
        )
