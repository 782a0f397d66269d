"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the domain where a formula is defined."""


class PoleError(ArithmeticError):
    """Evaluation hit (or came too close to) a pole of the function."""
