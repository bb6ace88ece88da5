"""Factorial divisors that every reduced Latin square count must have"""

from math import factorial, gcd
from typing import List, Mapping, Optional

from sympy import isprime

from ..exceptions import MissingConstant
from ..utils.output_saver import CheckResult
from .constants import PublishedConstants


def predicted_divisor(n: int, known_squares: Optional[Mapping[int, int]] = None) -> int:
    """
    Divisor of R_n built from smaller counts.

    Even n: (n/2)!. Odd n = 2m + 1: gcd(m! (m-1)! R_m, (m+1)!).

    Args:
        n: Order, n >= 2
        known_squares: Computed R_m values, consulted before the published table

    Raises:
        MissingConstant: R_m is neither supplied nor published
    """
    if n < 2:
        raise ValueError(f"predicted_divisor needs n >= 2, got {n}")
    if n % 2 == 0:
        return factorial(n // 2)
    m = (n - 1) // 2
    return gcd(factorial(m) * factorial(m - 1) * _reduced_square(m, known_squares), factorial(m + 1))


def corollary_divisor(n: int) -> int:
    """
    floor((n-1)/2)! when n = 2p - 1 for a prime p, floor((n+1)/2)! otherwise.
    """
    if n < 2:
        raise ValueError(f"corollary_divisor needs n >= 2, got {n}")
    if (n + 1) % 2 == 0 and isprime((n + 1) // 2):
        return factorial((n - 1) // 2)
    return factorial((n + 1) // 2)


def check_divisibility(n: int, reduced_count: int, known_squares: Optional[Mapping[int, int]] = None) -> List[CheckResult]:
    """
    Test R_n against both divisors; failures are report entries, not errors.
    """
    if reduced_count <= 0:
        raise ValueError(f"R_{n} must be positive, got {reduced_count}")
    results = []
    for check_id, divisor in (
        (f"predicted-divisor-n{n}", predicted_divisor(n, known_squares)),
        (f"corollary-divisor-n{n}", corollary_divisor(n)),
    ):
        passed = reduced_count % divisor == 0
        relation = "divides" if passed else "does not divide"
        results.append(CheckResult(check_id, passed, f"{divisor} {relation} {reduced_count}"))
    return results


def _reduced_square(m: int, known_squares: Optional[Mapping[int, int]]) -> int:
    if known_squares and m in known_squares:
        return known_squares[m]
    constants = PublishedConstants()
    if constants.has(m, m):
        return constants.reduced_squares(m)
    raise MissingConstant(f"R_{m} is needed for the divisor of R_{2 * m + 1}")
