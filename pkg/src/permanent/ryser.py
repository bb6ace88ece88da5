"""Exact integer permanents by Ryser's formula with Gray-code updates"""

from math import prod
from typing import Sequence

import numpy as np

from ..exceptions import check_budget

PERMANENT_MAX_N = 8


def permanent_int(matrix: Sequence[Sequence[int]], max_n: int = PERMANENT_MAX_N) -> int:
    """
    per(A) = (-1)^n sum over column subsets S of (-1)^|S| prod_i sum_{j in S} a_ij

    Subsets are visited in Gray-code order so each step adds or removes
    one column from the running row sums. Arithmetic is exact.

    Args:
        matrix: Square integer matrix
        max_n: Largest order accepted

    Returns:
        The permanent; 1 for the empty matrix
    """
    rows = [[int(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("permanent needs a square matrix")
    if n == 0:
        return 1
    check_budget("permanent_int", n, max_n)

    row_sums = [0] * n
    total = 0
    previous = 0
    for step in range(1, 1 << n):
        gray = step ^ (step >> 1)
        changed = gray ^ previous
        j = changed.bit_length() - 1
        if gray & changed:
            for i in range(n):
                row_sums[i] += rows[i][j]
        else:
            for i in range(n):
                row_sums[i] -= rows[i][j]
        previous = gray
        term = prod(row_sums)
        total += -term if (n - gray.bit_count()) & 1 else term
    return total


def batch_permanents(matrices: np.ndarray) -> np.ndarray:
    """
    Permanents of a stack of small integer matrices, shape (B, n, n).

    Same Gray-code walk as permanent_int, vectorised over the batch. Values
    must fit in int64, which holds for sign matrices up to n = 8.
    """
    count, n, _ = matrices.shape
    row_sums = np.zeros((count, n), dtype=np.int64)
    total = np.zeros(count, dtype=np.int64)
    previous = 0
    for step in range(1, 1 << n):
        gray = step ^ (step >> 1)
        changed = gray ^ previous
        j = changed.bit_length() - 1
        if gray & changed:
            row_sums += matrices[:, :, j]
        else:
            row_sums -= matrices[:, :, j]
        previous = gray
        term = np.prod(row_sums, axis=1)
        if (n - gray.bit_count()) & 1:
            total -= term
        else:
            total += term
    return total
