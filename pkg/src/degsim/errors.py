"""Exception hierarchy shared by every module."""


class DegsimError(Exception):
    """Base class; the CLI maps these to exit code 1."""


class DomainError(DegsimError, ArithmeticError):
    pass


class ShapeError(DegsimError, ValueError):
    pass


class ParseError(DegsimError, ValueError):
    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class CapacityError(DegsimError, ValueError):
    pass


class ConfigError(DegsimError, ValueError):
    pass


class InvariantViolation(DegsimError, AssertionError):
    """An internal cross-check failed. Seeing this means a bug."""
