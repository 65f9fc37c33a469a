"""Exception types raised by binent."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConfigError(ValueError):
    """A solver or sweep configuration is invalid."""


class NonConvergenceError(ArithmeticError):
    """The root finder exhausted its iteration budget.

    ``h`` holds the entropy value (nats) being inverted, when known.
    """

    def __init__(self, message, h=None):
        super().__init__(message)
        self.h = h
