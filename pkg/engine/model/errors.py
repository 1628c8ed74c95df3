# errors.py - Exception hierarchy shared by every engine module.
# Each error also derives from the closest builtin so callers catching
# ValueError / IndexError / ArithmeticError keep working.


class PricingError(Exception):
    """Base class for all pricing engine errors."""


class InvalidModelError(PricingError, ValueError):
    """A distribution, arrival spec, market model or config failed validation."""


class DomainError(PricingError, ValueError):
    """An argument lies outside the domain of the operation."""


class TableRangeError(PricingError, IndexError):
    """An index beyond the computed part of a BetaTable was requested."""

    def __init__(self, n, max_index):
        super().__init__(f"n={n} is beyond the table (max_index={max_index}); extend the table first")
        self.n = n
        self.max_index = max_index


class ComparabilityError(PricingError, ValueError):
    """Two models do not have equal demand lambda*mu on some piece."""

    def __init__(self, message, piece=None):
        super().__init__(message)
        self.piece = piece


class SolverError(PricingError, ArithmeticError):
    """The beta root finder failed to converge."""

    def __init__(self, message, n=None, bracket=None, iterations=None):
        super().__init__(message)
        self.n = n
        self.bracket = bracket
        self.iterations = iterations


class ConsistencyError(PricingError, ArithmeticError):
    """Two computation paths that must agree did not."""
