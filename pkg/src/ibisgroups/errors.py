"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class CapacityError(RuntimeError):
    """A configured cap (degree, enumeration, search) would be exceeded."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class PreconditionError(ValueError):
    """An operation was called outside its hypotheses."""


class DomainError(ZeroDivisionError):
    """Arithmetic outside the domain of an operation (e.g. inverting zero)."""
