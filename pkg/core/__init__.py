"""
Groups, abelian targets, the Jensen solver, the SR2 criterion and the checks

Submodules import utils.int_linalg, which itself needs core.errors, so only
the error types are re-exported here.
"""

from .errors import (
    CapExceededError,
    ConsistencyError,
    InvalidInputError,
    JensenError,
    SpecParseError,
    UsageError,
)

__all__ = [
    'CapExceededError',
    'ConsistencyError',
    'InvalidInputError',
    'JensenError',
    'SpecParseError',
    'UsageError',
]
