"""Exception types shared across the package."""


class GroupMdsError(Exception):
    """Base class for all library-specific errors."""


class InvalidElementError(GroupMdsError):
    """An element does not belong to the group or metric it was used with."""


class TooLargeError(GroupMdsError):
    """A computation was refused because it exceeds a size guard."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class NotBiInvariantError(GroupMdsError):
    """A metric failed the bi-invariance requirement.

    ``counterexample`` holds the witnessing triple (f, g, h) together with
    the side ('left' or 'right') on which invariance broke.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class RankingParseError(GroupMdsError):
    """A ranking file could not be parsed; ``line_number`` is 1-based."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number


class UnsupportedClosedFormError(GroupMdsError):
    """The requested closed-form spectrum does not cover this size."""
