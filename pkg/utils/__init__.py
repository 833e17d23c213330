"""Utility modules: errors, console output and serialization"""

from utils.errors import (
    CapacityError,
    ContractError,
    GraphAlgebraError,
    InputError,
    InternalError,
    TermSyntaxError,
)
from utils.console import section, set_quiet, status, warn

__all__ = [
    'CapacityError',
    'ContractError',
    'GraphAlgebraError',
    'InputError',
    'InternalError',
    'TermSyntaxError',
    'section',
    'set_quiet',
    'status',
    'warn',
]
