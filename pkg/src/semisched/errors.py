"""Exception hierarchy shared across the package."""


class ScheduleError(ValueError):
    """Base class for invalid inputs to any scheduling operation."""


class EmptyInstance(ScheduleError):
    pass


class NonPositiveSize(ScheduleError):
    pass


class NotNonIncreasing(ScheduleError):
    pass


class MachineCountTooSmall(ScheduleError):
    pass


class LengthMismatch(ScheduleError):
    pass


class MachineIndexOutOfRange(ScheduleError):
    pass


class MachineCountMismatch(ScheduleError):
    """A policy was asked to run on a machine count it is not defined for."""


class UnspecifiedBranch(ScheduleError):
    """The revealed sizes fall in a region the SD rules leave undefined."""


class MismatchedInstance(ScheduleError):
    pass


class KOutOfRange(ScheduleError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """The exact-optimum search ran out of its node budget.

    This is never turned into an approximation; shrink the instance or
    raise the budget (``SEMISCHED_NODE_BUDGET``).
    """

    def __init__(self, budget: int):
        super().__init__(f"exact search exceeded node budget of {budget}")
        self.budget = budget
