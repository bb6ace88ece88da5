"""Prime factorizations and 2-adic valuations of large counts"""

from dataclasses import dataclass
from math import prod
from typing import Tuple

from sympy import factorint, isprime, multiplicity

from ..exceptions import FactorizationIncomplete
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class Factorization:
    """(prime, exponent) pairs with strictly increasing primes"""

    factors: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p ** e for p, e in self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_verified(self) -> bool:
        """Primes increasing, each prime, exponents positive."""
        primes = self.primes
        return (
            all(a < b for a, b in zip(primes, primes[1:]))
            and all(isprime(p) for p in primes)
            and all(e >= 1 for _, e in self.factors)
        )

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(value: int) -> Factorization:
    """
    Complete factorization (trial division, then Pollard rho and p-1 on the
    cofactor), with every reported prime re-checked.

    Raises:
        ValueError: value < 1
        FactorizationIncomplete: a reported factor is composite
    """
    if value < 1:
        raise ValueError(f"factorize needs a positive integer, got {value}")

    found = factorint(value)
    factors = []
    for p, e in sorted(found.items()):
        if not isprime(p):
            raise FactorizationIncomplete(f"cofactor {p} of {value} is not prime")
        factors.append((int(p), int(e)))

    factorization = Factorization(tuple(factors))
    if factorization.value != value:
        raise FactorizationIncomplete(f"factors of {value} do not multiply back")
    logger.debug(f"{value} = {factorization}")
    return factorization


def two_power_valuation(value: int) -> int:
    """Largest e with 2^e dividing value."""
    if value < 1:
        raise ValueError(f"two_power_valuation needs a positive integer, got {value}")
    return int(multiplicity(2, value))
