"""
Command line interface for skewgof
"""

from .main import cli

__all__ = ['cli']
