"""
Configuration command
"""

import click

from ...config import save_config
from ...core.formatters.report_formatter import render_config
from ...exceptions import handle_cli_errors
from ..formatters.output_formatters import emit, status


@click.command('config')
@click.option('--save', is_flag=True, help='Write the effective configuration to ~/.skewgof/config.json')
@click.pass_context
@handle_cli_errors
def config_command(ctx, save):
    """Show the effective configuration (file, environment and global options)"""
    config = ctx.obj['config']
    emit(render_config(config.to_dict(), ctx.obj['output_format']))
    if save:
        path = save_config(config)
        status(f"Configuration saved to {path}")
