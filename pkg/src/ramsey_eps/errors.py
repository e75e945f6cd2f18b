"""Exception types shared across the package."""


class RamseyEpsError(Exception):
    """Base class for all errors raised by this package."""


class BudgetExceeded(RamseyEpsError):
    """The work budget of a computation ran out before it finished."""

    def __init__(self, limit: int, used: int, where: str = ""):
        self.limit = limit
        self.used = used
        self.where = where
        # filled in by callers that hold richer statistics
        self.counters: dict = {}
        msg = f"work budget of {limit} steps exceeded"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class DepthLimitExceeded(RamseyEpsError):
    """An exhaustive Depth search was asked for more levels than allowed."""


class InternalInvariantViolation(RamseyEpsError):
    """A value that the construction guarantees to exist was not found."""


class TableTooShort(RamseyEpsError):
    """A finite function table was read outside the indices it covers."""


class CapInsufficient(RamseyEpsError):
    """A bounded witness search cannot produce a value below its cap."""


class DepthTooLarge(RamseyEpsError):
    """Brute-force game solving was requested beyond its depth limit."""


class SpecError(RamseyEpsError, ValueError):
    """A colouring, eta or game description could not be parsed."""
