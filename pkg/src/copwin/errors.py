"""Exception types shared across the package."""


class CopwinError(Exception):
    """Base class for all package-specific errors."""


class Graph6Error(CopwinError, ValueError):
    """Malformed graph6 input; carries the byte offset of the bad byte."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = "%s (byte offset %d)" % (message, offset)
        super().__init__(message)
        self.offset = offset


class DisconnectedGraphError(CopwinError, ValueError):
    """Operation requires a connected graph."""


class UnsupportedParameterError(CopwinError, ValueError):
    """Graph family parameter outside the supported range."""


class StateBudgetError(CopwinError, RuntimeError):
    """Solve aborted because the state space exceeds the configured budget.

    ``lower_bound`` carries the best cop-count lower bound established
    before the budget ran out (used by cop_number search), if any.
    """

    def __init__(self, estimated, budget, lower_bound=None):
        super().__init__(
            "state space too large: %d states exceeds budget of %d"
            % (estimated, budget)
        )
        self.estimated = estimated
        self.budget = budget
        self.lower_bound = lower_bound
