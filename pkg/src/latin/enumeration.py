"""Exhaustive enumeration of reduced Latin rectangles"""

from math import factorial
from typing import Iterator, List

from ..exceptions import InexactDivision, ShapeInvalid, check_budget
from ..utils.logger import setup_logger
from .rectangle import LatinRectangle

logger = setup_logger(__name__)

ENUMERATE_REDUCED_MAX_N = 7


def enumerate_reduced(k: int, n: int, max_n: int = ENUMERATE_REDUCED_MAX_N) -> Iterator[LatinRectangle]:
    """
    Yield every reduced k x n Latin rectangle exactly once.

    Free cells are filled row by row, left to right, trying symbols in
    increasing order, so the stream is in lexicographic row-major order.

    Args:
        k: Number of rows, 1 <= k <= n
        n: Number of columns
        max_n: Largest n accepted

    Raises:
        ShapeInvalid: k outside 1..n
        BudgetExceeded: n above max_n
    """
    if not 1 <= k <= n:
        raise ShapeInvalid(f"need 1 <= k <= n, got k={k} n={n}")
    check_budget("enumerate_reduced", n, max_n)

    full = (1 << n) - 1
    grid: List[List[int]] = [[0] * n for _ in range(k)]
    row_used = [0] * k
    column_used = [0] * n
    for j in range(n):
        grid[0][j] = j + 1
        column_used[j] |= 1 << j
    row_used[0] = full
    for i in range(1, k):
        grid[i][0] = i + 1
        row_used[i] = 1 << i
        column_used[0] |= 1 << i

    free_cells = [(i, j) for i in range(1, k) for j in range(1, n)]
    last = len(free_cells)

    def fill(position: int) -> Iterator[LatinRectangle]:
        if position == last:
            yield LatinRectangle(tuple(tuple(row) for row in grid))
            return
        i, j = free_cells[position]
        options = full & ~(row_used[i] | column_used[j])
        while options:
            bit = options & -options
            options ^= bit
            grid[i][j] = bit.bit_length()
            row_used[i] |= bit
            column_used[j] |= bit
            yield from fill(position + 1)
            row_used[i] ^= bit
            column_used[j] ^= bit
        grid[i][j] = 0

    yield from fill(0)


def count_reduced(k: int, n: int, max_n: int = ENUMERATE_REDUCED_MAX_N) -> int:
    """R_{k,n} by exhaustive enumeration."""
    total = sum(1 for _ in enumerate_reduced(k, n, max_n))
    logger.debug(f"Enumerated {total} reduced {k}x{n} rectangles")
    return total


def total_from_reduced(k: int, n: int, reduced_count: int) -> int:
    """
    L_{k,n} = n! (n-1)! R_{k,n} / (n-k)!

    Raises:
        InexactDivision: the quotient is not an integer
    """
    if not 1 <= k <= n:
        raise ShapeInvalid(f"need 1 <= k <= n, got k={k} n={n}")
    if reduced_count < 0:
        raise ValueError(f"reduced count must be non-negative, got {reduced_count}")
    numerator = factorial(n) * factorial(n - 1) * reduced_count
    total, remainder = divmod(numerator, factorial(n - k))
    if remainder:
        raise InexactDivision(f"n!(n-1)!R / (n-k)! is not an integer for k={k} n={n}")
    return total
