"""
Output helpers for the CLI: the rendered string goes to stdout or a file,
status lines go to stderr so machine-readable output stays clean.
"""

from typing import Optional

import click

from ...exceptions import GofCLIFileError
from ..validators.cli_validators import validate_cli_file_path


def emit(text: str, output: Optional[str] = None) -> None:
    """Write rendered output to `output`, or echo it when no path is given"""
    if not output:
        click.echo(text)
        return

    validate_cli_file_path(output, operation="write")
    try:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
    except OSError as e:
        raise GofCLIFileError(
            f"Error writing to file: {e}",
            file_path=output,
            operation="write"
        )
    status(f"Written to {output}")


def status(message: str) -> None:
    click.echo(message, err=True)
