"""Exception hierarchy shared by every engine module."""


class ClosureLabError(Exception):
    """Base class for engine errors."""


class UsageError(ClosureLabError, ValueError):
    """Inputs violate an operation's preconditions (mismatched rings, zero divisor, ...)."""


class NotPrimaryError(ClosureLabError):
    """An operation needing an m-primary ideal received one of positive dimension."""

    def __init__(self, message, variable=None):
        super().__init__(message)
        self.variable = variable


class UnsupportedError(ClosureLabError):
    """The engine has no algorithm for this input class."""


class UnstabilizedError(ClosureLabError):
    """An ascending chain or difference table did not settle within its cap.

    ``partial`` carries whatever was computed before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else {}


class ReductionNotFound(ClosureLabError):
    """Random reduction search exhausted its draws without a verified candidate."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
