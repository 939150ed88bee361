"""
Exception classes for the skewgof package.
"""

from .base import GofBaseException, GofErrorCategory
from .validation_exceptions import GofValidationError, GofDomainError
from .config_exceptions import GofConfigurationError, GofFileError, GofFormatError
from .domain_exceptions import GofNumericError, GofDependencyError
from .cli_exceptions import (
    GofCLIError,
    GofCLIArgumentError,
    GofCLIFileError,
    GofVerificationFailed,
    handle_cli_errors,
    exit_code_for,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    EXIT_USAGE,
    EXIT_NUMERIC,
)
from .utils import (
    create_error_context,
    format_error_for_display,
    log_exception_details,
    exception_to_dict,
)

__all__ = [
    "GofBaseException",
    "GofErrorCategory",
    "GofValidationError",
    "GofDomainError",
    "GofConfigurationError",
    "GofFileError",
    "GofFormatError",
    "GofNumericError",
    "GofDependencyError",
    "GofCLIError",
    "GofCLIArgumentError",
    "GofCLIFileError",
    "GofVerificationFailed",
    "handle_cli_errors",
    "exit_code_for",
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILED",
    "EXIT_USAGE",
    "EXIT_NUMERIC",
    "create_error_context",
    "format_error_for_display",
    "log_exception_details",
    "exception_to_dict",
]
