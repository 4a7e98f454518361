"""Exception types raised by the engine."""


class CharClassError(Exception):
    """Base class for every error raised by :mod:`charclass`."""


class InvalidSpecError(CharClassError, ValueError):
    """A ring descriptor or a combination of options is not allowed."""


class InvalidInputError(CharClassError, ValueError):
    """An argument is outside an operation's domain."""


class RingMismatchError(CharClassError, ValueError):
    """Operands belong to different rings."""


class ExprSyntaxError(CharClassError, ValueError):
    """Malformed expression text.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownGeneratorError(ExprSyntaxError):
    pass


class FlavorMismatchError(ExprSyntaxError):
    pass


class InvariantViolation(CharClassError, AssertionError):
    """An internal consistency check failed.  Always a bug."""
