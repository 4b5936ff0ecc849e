"""lrc.errors

Exception hierarchy. Parameter and validation problems derive from
ValueError; runtime undecodability derives from DecodeError. The CLI maps
the first family to exit code 2 and the second to exit code 3.
"""

from typing import Any, Optional


class LrcError(Exception):
    """Base class for every error raised by the library."""


class ParameterError(LrcError, ValueError):
    """A precondition on construction or call parameters failed."""


class FieldMismatchError(ParameterError):
    """Operands belong to different fields."""


class EnumerationCapError(ParameterError):
    """An enumeration would exceed its configured cap."""


class DecodeError(LrcError):
    """Symbols could not be recovered from what survived."""


class InsufficientSurvivorsError(DecodeError):
    """Too few surviving symbols in the block used for repair."""

    def __init__(self, message: str, block: Optional[int] = None):
        super().__init__(message)
        self.block = block


class UndecodableError(DecodeError):
    """Global erasure decoding is rank deficient."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness
