"""Exception types shared across the package.

Two families live here.  Plain errors (``InputError`` and friends) mean the
caller passed something malformed.  *Conclusions* (``NoCvdConclusion`` and its
subclass ``BudgetExceeded``) are correct answers: they certify that the graph
has no chordal vertex deletion set of the promised size.
"""


class ScdtError(Exception):
    """Base class for every exception raised by this package."""


class InputError(ScdtError, ValueError):
    """Malformed or out-of-range input."""


class NonChordalInput(InputError):
    """An operation that needs a chordal graph was handed a non-chordal one."""

    def __init__(self, message: str, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class PreconditionViolated(InputError):
    pass


class NoCvdConclusion(ScdtError):
    """Certificate that the graph has no CVD of size ``k``."""

    def __init__(self, k: int, reason: str = ""):
        msg = f"no chordal vertex deletion set of size {k}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.k = k
        self.reason = reason


class BudgetExceeded(NoCvdConclusion):
    """More than ``2^k * n`` maximal cliques were found."""

    def __init__(self, k: int, limit: int):
        super().__init__(k, f"more than {limit} maximal cliques")
        self.limit = limit


class LimitExceeded(ScdtError):
    """A minimum vertex cut is larger than the allowed limit."""

    def __init__(self, limit: int):
        super().__init__(f"minimum cut exceeds limit {limit}")
        self.limit = limit


class NoSolution(ScdtError):
    """No node multiway cut exists within the budget."""


class TooLarge(ScdtError):
    """Input exceeds the vertex cap of a brute-force oracle."""


class ParseError(ScdtError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.detail = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(ScdtError):
    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)
