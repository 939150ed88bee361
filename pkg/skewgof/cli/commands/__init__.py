"""
CLI commands for skewgof
"""

from .efficiency_commands import table1, eigen, lao
from .testing_commands import test_command, nulltable, power, convergence
from .verify_commands import verify
from .config_commands import config_command

__all__ = [
    'table1',
    'eigen',
    'lao',
    'test_command',
    'nulltable',
    'power',
    'convergence',
    'verify',
    'config_command',
]
