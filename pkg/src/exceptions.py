"""Exception hierarchy shared by all census modules"""

from typing import Optional


class LatinCensusError(Exception):
    """Base class for every error raised by the toolkit"""


class InvalidRectangle(LatinCensusError):
    """An array that is not a Latin rectangle"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message)
        self.row = row
        self.column = column


class RowRepeat(InvalidRectangle):
    pass


class ColumnRepeat(InvalidRectangle):
    pass


class SymbolOutOfRange(InvalidRectangle):
    pass


class ShapeInvalid(InvalidRectangle):
    pass


class NotSquare(LatinCensusError):
    pass


class DegreeMismatch(LatinCensusError):
    pass


class BudgetExceeded(LatinCensusError):
    """Requested size is beyond the configured exhaustive-search budget"""


class InexactDivision(LatinCensusError):
    pass


class InexactSum(LatinCensusError):
    """A class summation failed to produce an integer (implementation bug)"""


class NotAnEdge(LatinCensusError):
    pass


class FactorNotInGraph(LatinCensusError):
    pass


class EmptyGraph(LatinCensusError):
    pass


class MissingConstant(LatinCensusError):
    pass


class FactorizationIncomplete(LatinCensusError):
    pass


class MemoCacheError(LatinCensusError):
    pass


def check_budget(name: str, n: int, max_n: int) -> None:
    """Raise BudgetExceeded when n is above the configured limit."""
    if n > max_n:
        raise BudgetExceeded(f"{name}: n={n} exceeds budget max_n={max_n}")
