"""Exception types raised by maxcode."""


class MaxcodeError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(MaxcodeError):
    """Bad alphabet, a symbol outside the alphabet, or mismatched alphabets."""


class ParseError(MaxcodeError):
    """Malformed regular expression or text file."""

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class StateBudgetExceeded(MaxcodeError):
    """An intermediate automaton grew past the configured state budget."""


class NotIndependentError(MaxcodeError):
    """A language was required to be independent but is not."""


class UniverseError(MaxcodeError):
    """A seed language is not contained in the universe."""
