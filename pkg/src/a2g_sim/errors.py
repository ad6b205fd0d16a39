"""Exception hierarchy shared by every module."""


class A2GError(Exception):
    """Base class for simulator errors."""


class DomainError(A2GError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InfeasibleError(A2GError):
    """The requested LoS threshold cannot be met at any elevation angle."""


class CapacityError(A2GError):
    """A generated device population exceeds the configured hard cap."""


class ConfigError(A2GError, ValueError):
    """Invalid configuration, sweep grid or plot input."""


class ScenarioError(A2GError):
    """A scenario cannot be evaluated (for example, no cluster heads elected)."""
