"""Exception hierarchy.

Every input-validation failure derives from :class:`PositroidError` (itself a
``ValueError``); exceeding a configured enumeration budget raises
:class:`BudgetExceeded`, which the CLI maps to a distinct exit code.
"""


class PositroidError(ValueError):
    """Base class for invalid input to any operation in the package."""


class DuplicateResidue(PositroidError):
    pass


class BadWindowSum(PositroidError):
    pass


class PeriodMismatch(PositroidError):
    pass


class EqualResidues(PositroidError):
    pass


class NotZeroGrassmannian(PositroidError):
    pass


class NotBounded(PositroidError):
    pass


class RectangleOverflow(PositroidError):
    pass


class SizeMismatch(PositroidError):
    pass


class RingMismatch(PositroidError):
    pass


class NotSymmetric(PositroidError):
    pass


class FullSubset(PositroidError):
    pass


class NotComparable(PositroidError):
    pass


class NotToric(PositroidError):
    pass


class NormalizationFailed(PositroidError):
    pass


class TooManyRows(PositroidError):
    pass


class ZeroGrassmannianLeaf(PositroidError):
    pass


class InvalidShape(PositroidError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size limit."""

    def __init__(self, what, limit, actual=None):
        self.what = what
        self.limit = limit
        self.actual = actual
        msg = f"{what} exceeds budget {limit}"
        if actual is not None:
            msg += f" (got {actual})"
        super().__init__(msg)
