"""
Base exception classes for the skewgof package.
"""

from typing import Optional, Dict, Any
from enum import Enum


class GofErrorCategory(Enum):
    """Categories of skewgof errors"""
    VALIDATION_ERROR = "validation_error"
    CONFIGURATION_ERROR = "configuration_error"
    DOMAIN_ERROR = "domain_error"
    NUMERIC_ERROR = "numeric_error"
    DEPENDENCY_ERROR = "dependency_error"
    FILE_ERROR = "file_error"
    FORMAT_ERROR = "format_error"


class GofBaseException(Exception):
    """Base exception class for all skewgof errors"""

    def __init__(
        self,
        message: str,
        category: GofErrorCategory = GofErrorCategory.VALIDATION_ERROR,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.category = category
        self.error_code = error_code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for JSON serialization"""
        return {
            "error_type": self.__class__.__name__,
            "category": self.category.value,
            "message": str(self),
            "error_code": self.error_code,
            "details": self.details
        }
