"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A parameter or structural constraint was violated."""


class CapacityError(RuntimeError):
    """A requested computation exceeds the configured size limits."""


class UndefinedRadiusError(ValidationError):
    """An operation needing a ball radius was called on a colouring with t_f = -1."""
