"""
Output formatters for CLI
"""

from .output_formatters import (
    emit,
    status,
)

__all__ = [
    'emit',
    'status',
]
