"""
Exception hierarchy shared by all modules
"""

from typing import Optional


class JensenError(Exception):
    """Base class for every error raised by this package"""


class InvalidInputError(JensenError, ValueError):
    """Malformed input: bad parameter, bad Cayley table, non-involution, ..."""


class CapExceededError(JensenError):
    """A size or enumeration cap was exceeded"""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds the cap of {limit}")


class SpecParseError(InvalidInputError):
    """Syntax error in a group, target, element or residue spec"""

    def __init__(self, message: str, text: str, position: int, token: Optional[str] = None):
        self.text = text
        self.position = position
        self.token = token if token is not None else text[position:position + 1]
        shown = repr(self.token) if self.token else "end of input"
        super().__init__(f"{message} at position {position} ({shown}) in {text!r}")


class ConsistencyError(JensenError, AssertionError):
    """Two independent computations of the same object disagreed"""


class UsageError(JensenError):
    """Command-line usage error"""
