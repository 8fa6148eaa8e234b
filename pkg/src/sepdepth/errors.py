"""Exception hierarchy shared by the library and the CLI."""


class SepdepthError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class InputError(SepdepthError, ValueError):
    """Malformed graph, vertex set or file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(SepdepthError, ValueError):
    """Operation is undefined for this (well-formed) input."""


class BudgetError(SepdepthError):
    """Input exceeds a configured size budget for an exhaustive method."""

    exit_code = 2


class ResourceError(SepdepthError):
    """A resource cap (e.g. the memo table) was hit mid-computation."""

    exit_code = 2

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats
