"""Exception hierarchy shared by the numerical modules and the CLI."""


class CasimirError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(CasimirError, ValueError):
    """A special function was evaluated at one of its poles."""


class DomainError(CasimirError, ValueError):
    """An argument lies outside the supported domain of a function."""


class ValidationError(CasimirError, ValueError):
    """Physical input rejected; ``field`` names the offending parameter."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class ConvergenceError(CasimirError, RuntimeError):
    """A series could not reach the requested tolerance within its term cap."""


class UnsupportedDimensionError(CasimirError, ValueError):
    """Only the physical transverse dimension d = 2 is implemented."""
