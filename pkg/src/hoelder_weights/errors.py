"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Arguments violate an operation's precondition."""


class ConjugateUndefinedError(InvalidInputError):
    """``1/r + 1/s`` vanishes, so no finite conjugate exponent exists."""


class CriticalPointDefect(RuntimeError):
    """The closed-form critical value disagrees with a dense direct search."""
