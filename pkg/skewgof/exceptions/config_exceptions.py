"""
Configuration and file exceptions for the skewgof package.
"""

from typing import Optional, List
from .base import GofBaseException, GofErrorCategory


class GofConfigurationError(GofBaseException):
    """Exception raised for unknown names and invalid configuration values"""

    def __init__(
        self,
        message: str,
        config_field: Optional[str] = None,
        valid_values: Optional[List[str]] = None
    ):
        if valid_values:
            message = f"{message}. Valid values: {', '.join(valid_values)}"
        super().__init__(
            message,
            GofErrorCategory.CONFIGURATION_ERROR,
            "CONFIG_ERROR"
        )
        self.config_field = config_field
        self.valid_values = valid_values or []
        if config_field:
            self.details["config_field"] = config_field
        if self.valid_values:
            self.details["valid_values"] = self.valid_values


class GofFileError(GofBaseException):
    """Exception raised when reading or writing files fails"""

    def __init__(
        self,
        message: str,
        file_path: Optional[str] = None,
        operation: Optional[str] = None
    ):
        super().__init__(
            message,
            GofErrorCategory.FILE_ERROR,
            "FILE_ERROR"
        )
        self.file_path = file_path
        self.operation = operation
        if file_path:
            self.details["file_path"] = file_path
        if operation:
            self.details["operation"] = operation


class GofFormatError(GofBaseException):
    """Exception raised for unsupported output formats"""

    def __init__(self, message: str, format_type: Optional[str] = None):
        super().__init__(
            message,
            GofErrorCategory.FORMAT_ERROR,
            "FORMAT_ERROR"
        )
        self.format_type = format_type
        if format_type:
            self.details["format_type"] = format_type
