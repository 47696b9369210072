"""Exception types shared across the toolkit."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for the given input."""


class GuardError(RuntimeError):
    """A configured guard ceiling (instance size, search budget) was exceeded."""
