"""
Latin square counts from permanents of +-1 matrices.

For any monic polynomial p of degree n,

    L_n = 2^(-n^2) * sum over X in {-1, +1}^(n x n) of p(per X) * pi(X)

where pi(X) is the product of the entries of X.
"""

from collections import Counter
from dataclasses import dataclass
from functools import partial
from itertools import permutations
from math import prod
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InexactDivision, check_budget
from ..utils.logger import setup_logger
from ..utils.parallel import WorkerPool, progress, split_range
from .ryser import batch_permanents, permanent_int

logger = setup_logger(__name__)

PERMANENT_COUNT_MAX_N = 5
DEFAULT_CHUNK_SIZE = 65536


@dataclass(frozen=True)
class SignMatrix:
    """An n x n matrix over {-1, +1}."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValueError("sign matrix must be square and non-empty")
        if any(x not in (-1, 1) for row in self.entries for x in row):
            raise ValueError("sign matrix entries must be -1 or +1")

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "SignMatrix":
        """Bit i*n + j set means entry (i, j) is -1."""
        return cls(tuple(
            tuple(-1 if bits >> (i * n + j) & 1 else 1 for j in range(n)) for i in range(n)
        ))

    @property
    def n(self) -> int:
        return len(self.entries)

    def negated(self) -> "SignMatrix":
        return SignMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def permanent(self) -> int:
        return permanent_int(self.entries)


def product_of_entries(matrix: SignMatrix) -> int:
    """pi(X): +1 for an even number of -1 entries, -1 otherwise."""
    negatives = sum(row.count(-1) for row in matrix.entries)
    return -1 if negatives & 1 else 1


@dataclass(frozen=True)
class MonicPolynomial:
    """z^n + c_{n-1} z^(n-1) + ... + c_0 with integer coefficients."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("monic polynomial needs degree >= 1")

    @classmethod
    def power(cls, degree: int) -> "MonicPolynomial":
        return cls((0,) * degree)

    @classmethod
    def parse(cls, text: str, degree: int) -> "MonicPolynomial":
        """
        Parse lower coefficients "c0,c1,...", padded with zeros to the degree.

        Raises:
            ValueError: more coefficients than the degree allows
        """
        values = [int(part) for part in text.split(",") if part.strip()]
        if len(values) > degree:
            raise ValueError(f"{len(values)} coefficients given for a degree-{degree} polynomial")
        return cls(tuple(values) + (0,) * (degree - len(values)))

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def __call__(self, z: int) -> int:
        value = 1
        for coefficient in reversed(self.coefficients):
            value = value * z + coefficient
        return value

    def __str__(self) -> str:
        terms = [f"z^{self.degree}"]
        for power in range(self.degree - 1, -1, -1):
            c = self.coefficients[power]
            if c:
                terms.append(f"{c}*z^{power}" if power else str(c))
        return " + ".join(terms)


def _range_sum(index_range: range, n: int, coefficients: Tuple[int, ...], chunk_size: int) -> int:
    """
    Sum of p(per X) pi(X) over the sign matrices with Gray-code indices in
    index_range. Matrix g = i ^ (i >> 1) has entry (r, c) negative iff bit
    r*n + c of g is set.
    """
    polynomial = MonicPolynomial(coefficients)
    shifts = np.arange(n * n, dtype=np.int64)
    total = 0
    for low in range(index_range.start, index_range.stop, chunk_size):
        high = min(low + chunk_size, index_range.stop)
        indices = np.arange(low, high, dtype=np.int64)
        gray = indices ^ (indices >> 1)
        bits = (gray[:, None] >> shifts) & 1
        signs = (1 - 2 * bits).reshape(-1, n, n)
        permanents = batch_permanents(signs)
        negative = bits.sum(axis=1) & 1

        tally = Counter(zip(permanents.tolist(), negative.tolist()))
        for (value, odd), count in tally.items():
            term = count * polynomial(value)
            total += -term if odd else term
    return total


def latin_count_via_permanents(
    n: int,
    polynomial: Optional[MonicPolynomial] = None,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    max_n: int = PERMANENT_COUNT_MAX_N,
    show_progress: bool = False,
) -> int:
    """
    L_n from the signed permanent sum over all 2^(n^2) sign matrices.

    Args:
        n: Order of the squares
        polynomial: Monic polynomial of degree n, z^n when omitted
        workers: Processes sharing the index space
        chunk_size: Matrices per vectorised batch
        max_n: Largest n accepted

    Returns:
        L_n

    Raises:
        BudgetExceeded, InexactDivision
    """
    check_budget("latin_count_via_permanents", n, max_n)
    polynomial = polynomial or MonicPolynomial.power(n)
    if polynomial.degree != n:
        raise ValueError(f"polynomial degree {polynomial.degree} differs from n={n}")

    space = 1 << (n * n)
    parts = max(1, workers) * 4 if workers > 1 else 1
    ranges = split_range(0, space, parts)
    logger.info(f"Summing over {space} sign matrices for n={n} with p(z) = {polynomial}")

    task = partial(_range_sum, n=n, coefficients=polynomial.coefficients, chunk_size=chunk_size)
    with WorkerPool(workers) as pool:
        if pool.is_parallel:
            total = sum(pool.map(task, ranges))
        else:
            total = sum(task(part) for part in progress(ranges, show_progress, f"n={n}"))

    shift = n * n
    if total & ((1 << shift) - 1):
        raise InexactDivision(f"signed permanent sum for n={n} is not divisible by 2^{shift}")
    return total >> shift


def permanent_by_definition(matrix: Sequence[Sequence[int]]) -> int:
    """Sum over all permutations of the product of selected entries."""
    n = len(matrix)
    return sum(prod(matrix[i][sigma[i]] for i in range(n)) for sigma in permutations(range(n)))
