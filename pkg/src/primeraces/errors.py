"""Exception types shared across the package.

The CLI maps these onto process exit codes (usage 2, capacity 3,
I/O or parse 4, numeric non-convergence 5).
"""


class PrimeRacesError(Exception):
    """Base class for all package errors."""


class DomainError(PrimeRacesError, ValueError):
    """An argument is outside an operation's documented domain."""


class CapacityError(PrimeRacesError):
    """A request exceeds the configured desk-scale limits."""


class ParseError(PrimeRacesError):
    """A data file is malformed.  Carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ConvergenceError(PrimeRacesError):
    """A numeric routine could not reach the requested tolerance."""
