"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FloerSSError(Exception):
    """Base class for all engine errors."""


class DimensionMismatch(FloerSSError, ValueError):
    pass


class ShapeMismatch(FloerSSError, ValueError):
    def __init__(self, message: str, j: int | None = None, i: int | None = None):
        super().__init__(message)
        self.j = j
        self.i = i


class NotAComplex(FloerSSError, ValueError):
    pass


class RangeError(FloerSSError, IndexError):
    pass


class WindowTooSmall(RangeError):
    pass


class SRange(FloerSSError, ValueError):
    pass


class HFNotZero(FloerSSError, ValueError):
    pass


class NuTooLarge(FloerSSError, ValueError):
    pass


class SearchBudgetExceeded(FloerSSError, RuntimeError):
    def __init__(self, message: str, explored: int = 0):
        super().__init__(message)
        self.explored = explored


class BoundTooSmall(SearchBudgetExceeded):
    pass


class OutOfRange(FloerSSError, ValueError):
    pass


class ParseError(FloerSSError, ValueError):
    pass
