"""Exception types shared across the package."""


class RegulaError(Exception):
    """Base class for every error raised by regula."""


class InvalidArgument(RegulaError, ValueError):
    """An input violates an operation's precondition."""


class UnsupportedSize(RegulaError, ValueError):
    """An input exceeds the cap of an exhaustive routine."""


class AmbiguousSplit(InvalidArgument):
    """Majority and minority degrees coincide, so a two-color split has no orientation."""


class ParseError(RegulaError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
