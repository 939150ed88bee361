"""
Validation exceptions for the skewgof package.
"""

from typing import Optional, Any
from .base import GofBaseException, GofErrorCategory


class GofValidationError(GofBaseException):
    """Exception raised for invalid arguments, samples or densities"""

    def __init__(
        self,
        message: str,
        field_name: Optional[str] = None,
        field_value: Optional[Any] = None,
        expected: Optional[str] = None
    ):
        super().__init__(
            message,
            GofErrorCategory.VALIDATION_ERROR,
            "VALIDATION_ERROR"
        )
        self.field_name = field_name
        self.field_value = field_value
        self.expected = expected
        if field_name:
            self.details["field_name"] = field_name
        if field_value is not None:
            self.details["field_value"] = str(field_value)
        if expected:
            self.details["expected"] = expected


class GofDomainError(GofBaseException):
    """Exception raised when an observation lies outside the hypothesized support"""

    def __init__(
        self,
        index: int,
        value: float,
        support: tuple,
        line_number: Optional[int] = None
    ):
        where = f"line {line_number}" if line_number is not None else f"index {index}"
        message = (
            f"Value {value!r} at {where} is outside the support "
            f"[{support[0]}, {support[1]}] of the hypothesized density."
        )
        super().__init__(
            message,
            GofErrorCategory.DOMAIN_ERROR,
            "OUT_OF_SUPPORT"
        )
        self.index = index
        self.value = value
        self.support = support
        self.line_number = line_number
        self.details.update({
            "index": index,
            "value": value,
            "support": list(support),
        })
        if line_number is not None:
            self.details["line_number"] = line_number
