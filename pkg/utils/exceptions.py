"""
Exception hierarchy shared by every service.

All errors raised on purpose derive from ``StuckError`` so command handlers can
turn them into a failed response envelope without swallowing programming errors.
"""


class StuckError(Exception):
    """Base class for every deliberate failure in the toolkit."""


class ComplexInputError(StuckError, ValueError):
    """Malformed input: bad face, unknown vertex, bad file, bad parameter."""


class PreconditionError(StuckError, ValueError):
    """An operation was called outside its documented precondition."""


class StepError(StuckError, ValueError):
    """An elementary collapse or anticollapse is not legal on the current complex.

    Attributes:
        step: the offending step (a ``StepPair``) or None.
        condition (str): the violated condition, in words.
    """

    def __init__(self, condition: str, step=None):
        self.step = step
        self.condition = condition
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"Illegal move{where}: {condition}")


class MatchingError(StuckError, ValueError):
    """A set of pairs is not a matching on the Hasse diagram, or not acyclic."""


class SizeGuardError(StuckError, ValueError):
    """An exhaustive enumeration would exceed its configured guard."""


class SearchBudgetError(StuckError, RuntimeError):
    """A randomized search exhausted its budget.

    Attributes:
        stats (dict): counters describing what the search tried.
    """

    def __init__(self, message: str, stats: dict = None):
        self.stats = stats or {}
        super().__init__(message)
