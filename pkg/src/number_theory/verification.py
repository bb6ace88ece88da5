"""Consistency checks over the published constants"""

from math import prod
from typing import List, Optional

from ..utils.logger import setup_logger
from ..utils.output_saver import CheckResult
from .constants import R11_MODULUS, R11_RESIDUE, PublishedConstants
from .divisibility import check_divisibility
from .factoring import Factorization

logger = setup_logger(__name__)


def verify_published(constants: Optional[PublishedConstants] = None) -> List[CheckResult]:
    """
    Run every consistency check over the published tables.

    Checks the table checksum, R_11 mod 21175, R_{n-1,n} = R_{n,n} and
    R_{1,n} = 1, that each factorization is prime and multiplies back, and
    that both factorial divisors divide every R_n with n >= 2.
    """
    constants = constants or PublishedConstants()
    results: List[CheckResult] = [
        CheckResult("table-checksum", constants.checksum_ok(), "sha256 of the R_(k,n) table"),
    ]

    r11 = constants.reduced_squares(11)
    residue = r11 % R11_MODULUS
    results.append(CheckResult(
        "r11-residue", residue == R11_RESIDUE, f"R_11 mod {R11_MODULUS} = {residue}"
    ))

    for n in range(1, constants.max_n + 1):
        first_row = constants.reduced_rectangles(1, n)
        results.append(CheckResult(f"single-row-n{n}", first_row == 1, f"R_(1,{n}) = {first_row}"))
        if n >= 2:
            last_row = constants.reduced_rectangles(n - 1, n)
            square = constants.reduced_squares(n)
            results.append(CheckResult(
                f"last-row-forced-n{n}", last_row == square, f"R_({n - 1},{n}) = {last_row}, R_{n} = {square}"
            ))

    for n in range(4, constants.max_n + 1):
        factorization = Factorization(constants.factorization(n))
        value = constants.reduced_squares(n)
        product = prod(p ** e for p, e in factorization.factors)
        results.append(CheckResult(
            f"factorization-n{n}",
            product == value and factorization.is_verified(),
            f"R_{n} = {factorization}",
        ))

    for n in range(2, constants.max_n + 1):
        results.extend(check_divisibility(n, constants.reduced_squares(n)))

    failed = sum(1 for result in results if not result.passed)
    logger.info(f"Verified published constants: {len(results) - failed} passed, {failed} failed")
    return results
