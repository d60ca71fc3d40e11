"""Exception types shared across the package."""


class CharmonoidError(Exception):
    """Base class for all library-level errors."""


class RankMismatch(CharmonoidError):
    """A vector or presentation does not live in the expected ambient rank."""


class LengthMismatch(CharmonoidError):
    """An exponent vector has the wrong number of entries."""


class IndexMismatch(CharmonoidError):
    """Index sets or orderings of two datasets are inconsistent."""


class BadDegrees(CharmonoidError):
    """Character degree list is invalid (first degree must be 1, all positive)."""


class BadPartition(CharmonoidError):
    """A block family is not a partition of the expected index set."""


class BadCyclotomicData(CharmonoidError):
    """Cyclotomic value table is malformed or inconsistent with the class data."""


class NotMinimized(CharmonoidError):
    """An operation required a minimal generating set but got a redundant one."""


class NoSolution(CharmonoidError):
    """A Diophantine system that must be solvable (by theory) has no solution.

    Raised only when bundled data violates a theorem-level guarantee, which
    signals corrupt input rather than a legitimate negative answer.
    """


class ResourceLimit(CharmonoidError):
    """A search exceeded its configured node budget.

    This never stands for a wrong answer: the instance is merely too large
    for the configured budget.
    """

    def __init__(self, message: str, nodes: int | None = None):
        super().__init__(message)
        self.nodes = nodes


class SchemaError(CharmonoidError):
    """Dataset file violates the JSON schema; carries the offending path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class InvariantViolation(CharmonoidError):
    """Dataset parsed but breaks a documented data invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        msg = invariant if not detail else f"{invariant} ({detail})"
        super().__init__(msg)
        self.invariant = invariant
