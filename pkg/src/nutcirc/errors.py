"""Exception hierarchy shared by every nutcirc module."""


class NutcircError(Exception):
    """Base class for all package errors."""


class ParameterError(NutcircError, ValueError):
    """An argument violates a documented precondition or invariant."""


class CapacityError(NutcircError, RuntimeError):
    """A computation exceeds a configured size ceiling."""


class ConfigurationError(NutcircError, RuntimeError):
    """Required installed data (e.g. golden tables) is missing or unreadable."""
