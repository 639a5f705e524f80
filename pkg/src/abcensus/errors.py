"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class AbcensusError(Exception):
    exit_code = 1


class SpecParseError(AbcensusError, ValueError):
    exit_code = 2


class DomainError(AbcensusError, ValueError):
    exit_code = 3


class NotADivisorError(DomainError):
    def __init__(self, delta: int, n: int):
        super().__init__(f"{delta} does not divide the group exponent {n}")
        self.delta = delta
        self.n = n


class CapExceededError(AbcensusError):
    exit_code = 4

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class WidthOverflowError(AbcensusError, OverflowError):
    """Input outside the 64-bit range the library is specified for."""

    exit_code = 5


class NonIntegralError(AbcensusError, ArithmeticError):
    """An exact total that must be an integer came out fractional."""
