"""
Numerical and dependency exceptions for the skewgof package.
"""

from typing import Optional, Dict, Any
from .base import GofBaseException, GofErrorCategory


class GofNumericError(GofBaseException):
    """Exception raised when quadrature or root finding fails to converge"""

    def __init__(
        self,
        message: str,
        achieved_error: Optional[float] = None,
        requested_tolerance: Optional[float] = None,
        input_values: Optional[Dict[str, Any]] = None
    ):
        super().__init__(
            message,
            GofErrorCategory.NUMERIC_ERROR,
            "NUMERIC_ERROR"
        )
        self.achieved_error = achieved_error
        self.requested_tolerance = requested_tolerance
        if achieved_error is not None:
            self.details["achieved_error"] = achieved_error
        if requested_tolerance is not None:
            self.details["requested_tolerance"] = requested_tolerance
        self.details.update(input_values or {})


class GofDependencyError(GofBaseException):
    """Exception raised when a required artifact (e.g. a null table) is missing"""

    def __init__(self, message: str, missing: Optional[str] = None):
        super().__init__(
            message,
            GofErrorCategory.DEPENDENCY_ERROR,
            "DEPENDENCY_ERROR"
        )
        self.missing = missing
        if missing:
            self.details["missing"] = missing
