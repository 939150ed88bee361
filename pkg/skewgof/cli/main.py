#!/usr/bin/env python3
"""
CLI for skewgof: efficiency tables, goodness-of-fit tests against skew
alternatives, null tables, power studies and verification suites
Usage: skewgof [OPTIONS] COMMAND [ARGS]...
"""

import logging
import sys

import click

from ..config import get_config, set_config
from ..core.models.enums import OutputFormat
from ..exceptions import (
    GofBaseException,
    GofCLIError,
    GofCLIArgumentError,
)
from .commands import (
    table1,
    eigen,
    lao,
    test_command,
    nulltable,
    power,
    convergence,
    verify,
    config_command,
)
from .validators.cli_validators import validate_cli_output_format

FORMAT_CHOICES = [f.value for f in OutputFormat]


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("skewgof").setLevel(level)


@click.group()
@click.option('--verbose', '-v', count=True, help='Increase log verbosity (repeatable)')
@click.option('--format', 'output_format', type=click.Choice(FORMAT_CHOICES), default=None,
              help='Output format (default text, or SKEWGOF_OUTPUT_FORMAT)')
@click.option('--seed', type=int, default=None, help='Master seed for every simulation')
@click.option('--workers', type=int, default=None, help='Worker threads')
@click.option('--no-cache', is_flag=True, help='Neither read nor write cached null tables')
@click.option('--cache-dir', type=click.Path(file_okay=False), default=None,
              help='Null table cache directory (or SKEWGOF_CACHE_DIR)')
@click.version_option(package_name='skew-gof')
@click.pass_context
def cli(ctx, verbose, output_format, seed, workers, no_cache, cache_dir):
    """Goodness-of-fit statistics and their local Bahadur efficiency under skew alternatives"""
    configure_logging(verbose)
    try:
        if output_format is not None:
            validate_cli_output_format(output_format, FORMAT_CHOICES)
        if workers is not None and workers < 1:
            raise GofCLIArgumentError(
                f"Invalid worker count: {workers}",
                argument="workers",
                expected_type="int >= 1"
            )

        config = get_config().with_overrides(
            seed=seed,
            workers=workers,
            cache_dir=cache_dir,
            use_cache=False if no_cache else None,
            output_format=output_format,
        )
        set_config(config)

        ctx.ensure_object(dict)
        ctx.obj['config'] = config
        ctx.obj['output_format'] = config.output_format

    except GofBaseException as e:
        if not isinstance(e, GofCLIError):
            e = GofCLIError(f"Error initializing CLI: {e}")
        raise click.UsageError(str(e))


for command in (table1, eigen, lao, test_command, nulltable, power, convergence, verify, config_command):
    cli.add_command(command)


if __name__ == '__main__':
    cli()
