"""Exception types shared across the package."""


class ZetaMapError(Exception):
    """Base class for all package errors."""


class PoleError(ZetaMapError, ValueError):
    """Argument sits on a pole of the function being evaluated."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class DomainError(ZetaMapError, ValueError):
    pass


class TruncationError(ZetaMapError, ArithmeticError):
    """A series did not meet its stopping rule within ``max_terms``."""


class DegenerateError(ZetaMapError, ValueError):
    pass


class NoBracketError(ZetaMapError, ValueError):
    pass


class NoRootError(ZetaMapError, ValueError):
    pass


class RegistryError(ZetaMapError, ValueError):
    """Malformed claim registry."""
