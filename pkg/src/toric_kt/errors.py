"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class ToricKtError(Exception):
    """Base class for every error raised on purpose by this package."""


class InvalidFanError(ToricKtError, ValueError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class IncompatibleElementError(ToricKtError, ValueError):
    """A tuple fails the restriction compatibility check."""

    def __init__(self, message: str, failing_pair: tuple[int, int]):
        super().__init__(message)
        self.failing_pair = failing_pair


class NotInIdealError(ToricKtError, ValueError):
    """Input violates an ideal-membership precondition."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class ContractViolation(ToricKtError, RuntimeError):
    """An algorithm reached a state its correctness argument rules out."""


class ResourceLimitError(ToricKtError, RuntimeError):
    """Problem exceeds the configured desk-scale bounds."""
