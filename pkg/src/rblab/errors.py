"""Exception types shared by all modules."""


class InvalidParameterError(ValueError):
    """An argument is outside an operation's documented domain."""


class ResourceLimitError(RuntimeError):
    """An enumeration guard was exceeded (the instance is too large)."""


class ContractViolationError(RuntimeError):
    """An input violates a precondition that callers are supposed to establish."""


class FormatError(ValueError):
    """A text file does not conform to the rbsys/rbwt grammar."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
