"""Exception hierarchy."""


class WsneError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(WsneError, ValueError):
    """Game and strategy dimensions disagree."""


class NotSymmetricError(WsneError, ValueError):
    """An operation that needs ``C == R.T`` received another game."""


class MalformedSystemError(WsneError, ValueError):
    """A linear system has coefficient rows of the wrong length."""


class BudgetExceededError(WsneError):
    """The multiset search hit its work budget before deciding."""

    def __init__(self, message, work_done=0):
        super().__init__(message)
        self.work_done = work_done


class GuaranteeViolatedError(WsneError):
    """The search exhausted every pair; unreachable for valid input."""


class GameFormatError(WsneError, ValueError):
    """A game or profile file could not be parsed.

    ``line`` and ``column`` are 1-based and may be ``None`` when the
    problem is not tied to one token.
    """

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
