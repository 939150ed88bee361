"""
CLI-specific exceptions for the skewgof package.
"""

from typing import Optional, List
from functools import wraps
import json
import logging
import click
from .base import GofBaseException, GofErrorCategory
from .validation_exceptions import GofValidationError, GofDomainError
from .config_exceptions import GofConfigurationError, GofFileError, GofFormatError
from .domain_exceptions import GofNumericError, GofDependencyError
from .utils import create_error_context, exception_to_dict, format_error_for_display, log_exception_details

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class GofCLIError(GofBaseException):
    """Exception raised for CLI-specific errors"""

    def __init__(
        self,
        message: str,
        command: Optional[str] = None,
        exit_code: int = EXIT_USAGE
    ):
        super().__init__(
            message,
            GofErrorCategory.VALIDATION_ERROR,
            "CLI_ERROR"
        )
        self.command = command
        self.exit_code = exit_code
        if command:
            self.details["command"] = command
        self.details["exit_code"] = exit_code


class GofCLIArgumentError(GofCLIError):
    """Exception raised for CLI argument errors"""

    def __init__(
        self,
        message: str,
        argument: Optional[str] = None,
        expected_type: Optional[str] = None
    ):
        super().__init__(message, command=argument, exit_code=EXIT_USAGE)
        self.argument = argument
        self.expected_type = expected_type
        if argument:
            self.details["argument"] = argument
        if expected_type:
            self.details["expected_type"] = expected_type


class GofCLIFileError(GofCLIError):
    """Exception raised for CLI file operations"""

    def __init__(
        self,
        message: str,
        file_path: Optional[str] = None,
        operation: Optional[str] = None
    ):
        super().__init__(message, exit_code=EXIT_USAGE)
        self.file_path = file_path
        self.operation = operation
        if file_path:
            self.details["file_path"] = file_path
        if operation:
            self.details["operation"] = operation


class GofVerificationFailed(GofCLIError):
    """Raised when a reproduction or verification check does not pass"""

    def __init__(self, message: str, failed_checks: Optional[List[str]] = None):
        super().__init__(message, exit_code=EXIT_VERIFICATION_FAILED)
        self.failed_checks = failed_checks or []
        self.details["failed_checks"] = self.failed_checks


class _CodedClickException(click.ClickException):
    """ClickException carrying a custom exit code"""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def exit_code_for(error: Exception) -> int:
    """Map an exception to the documented CLI exit code"""
    if isinstance(error, GofCLIError):
        return error.exit_code
    if isinstance(error, GofNumericError):
        return EXIT_NUMERIC
    if isinstance(error, GofBaseException):
        return EXIT_USAGE
    return EXIT_NUMERIC


def _report(error: Exception, func_name: str, params: dict, always: bool = False) -> None:
    """Log the error context at -vv (always for unexpected errors); JSON mode also echoes it as JSON"""
    if always or logger.isEnabledFor(logging.DEBUG):
        log_exception_details(error, context=create_error_context(func_name, params, error), logger=logger)
    ctx = click.get_current_context(silent=True)
    obj = ctx.obj if ctx is not None else None
    fmt = obj.get('output_format') if isinstance(obj, dict) else None
    if getattr(fmt, 'value', fmt) == 'json':
        click.echo(json.dumps(exception_to_dict(error), default=str), err=True)


def _message(error: Exception) -> str:
    return format_error_for_display(error, include_details=logger.isEnabledFor(logging.INFO))


def handle_cli_errors(func):
    """
    Decorator to handle CLI errors and provide user-friendly output
    Usage: @handle_cli_errors above CLI command functions
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GofVerificationFailed as e:
            _report(e, func.__name__, kwargs)
            for name in e.failed_checks:
                click.echo(f"FAILED: {name}", err=True)
            raise _CodedClickException(_message(e), e.exit_code)

        except GofDomainError as e:
            _report(e, func.__name__, kwargs)
            raise _CodedClickException(_message(e), EXIT_USAGE)

        except GofConfigurationError as e:
            _report(e, func.__name__, kwargs)
            if e.config_field:
                click.echo(f"   Configuration field: {e.config_field}", err=True)
            raise _CodedClickException(_message(e), EXIT_USAGE)

        except GofValidationError as e:
            _report(e, func.__name__, kwargs)
            if e.field_name:
                click.echo(f"   Field: {e.field_name}", err=True)
            raise _CodedClickException(_message(e), EXIT_USAGE)

        except (GofFileError, GofFormatError, GofDependencyError) as e:
            _report(e, func.__name__, kwargs)
            raise _CodedClickException(_message(e), EXIT_USAGE)

        except GofNumericError as e:
            _report(e, func.__name__, kwargs)
            if e.achieved_error is not None:
                click.echo(f"   Achieved error estimate: {e.achieved_error:.3e}", err=True)
            raise _CodedClickException(f"Numeric failure: {_message(e)}", EXIT_NUMERIC)

        except GofCLIError as e:
            _report(e, func.__name__, kwargs)
            raise _CodedClickException(_message(e), e.exit_code)

        except GofBaseException as e:
            _report(e, func.__name__, kwargs)
            raise _CodedClickException(_message(e), exit_code_for(e))

        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise

        except KeyboardInterrupt:
            click.echo("\nOperation cancelled by user", err=True)
            raise click.Abort()

        except (FloatingPointError, ArithmeticError) as e:
            _report(e, func.__name__, kwargs, always=True)
            raise _CodedClickException(f"Numeric failure: {e}", EXIT_NUMERIC)

        except Exception as e:
            _report(e, func.__name__, kwargs, always=True)
            raise _CodedClickException(f"Unexpected error: {e}", EXIT_NUMERIC)

    return wrapper
