"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input errors -> 1, precondition
failures -> 2, exhausted budgets -> 3, internal bound violations -> 4.
"""


class GraphFormatError(ValueError):
    """Malformed graph or cover file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(ValueError):
    """Input violates a documented precondition of an operation."""


class NoCircuitCoverError(PreconditionError):
    """The signed graph admits no circuit cover (negativeness 1)."""


class BudgetExceededError(RuntimeError):
    """An exact search was stopped by its size or time budget."""


class BoundViolationError(AssertionError):
    """A guaranteed length or multiplicity bound failed: implementation bug."""
