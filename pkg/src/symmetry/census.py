"""Census of Latin squares with a non-trivial autoparatopism group"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import factorial
from typing import List, NamedTuple, Optional

from ..exceptions import MissingConstant, check_budget
from ..latin.autotopism import AUTOPARATOPISM_MAX_N, has_nontrivial_autoparatopism
from ..latin.enumeration import ENUMERATE_REDUCED_MAX_N, enumerate_reduced
from ..latin.permutation import CONJUGATES, Paratopism, Permutation, apply_paratopism
from ..latin.rectangle import LatinRectangle, reduce_rectangle
from ..number_theory.constants import PublishedConstants
from ..utils.logger import setup_logger
from ..utils.parallel import WorkerPool, batched, progress

logger = setup_logger(__name__)

SYMMETRY_MAX_N = 6
VERDICT_BATCH = 256


@dataclass(frozen=True)
class SymmetryCensus:
    """
    Reduced squares of order n, and how many have |Par(L)| > 1.

    Group order is an isotopy invariant and each reduced square stands for
    n!(n-1)! squares, so the reduced proportion equals the proportion over
    all squares.
    """

    n: int
    total_reduced: int
    nontrivial_reduced: int

    @property
    def proportion(self) -> Fraction:
        return Fraction(self.nontrivial_reduced, self.total_reduced)

    def to_line(self) -> str:
        bound = bound_value(self.n) if self.n >= 2 else None
        bound_text = "-" if bound is None else _fraction_text(bound)
        return (
            f"SYM {self.n} {self.total_reduced} {self.nontrivial_reduced} "
            f"{_fraction_text(self.proportion)} {bound_text}"
        )


class ClassEstimates(NamedTuple):
    """Estimated numbers of isomorphism, isotopy and main classes"""

    isomorphism: Fraction
    isotopy: Fraction
    main: Fraction


def _verdicts(squares: List[LatinRectangle], max_n: int = AUTOPARATOPISM_MAX_N) -> int:
    return sum(1 for square in squares if has_nontrivial_autoparatopism(square, max_n))


def symmetry_census(
    n: int,
    workers: int = 1,
    max_n: int = SYMMETRY_MAX_N,
    show_progress: bool = False,
    squares_max_n: int = ENUMERATE_REDUCED_MAX_N,
    autoparatopism_max_n: int = AUTOPARATOPISM_MAX_N,
) -> SymmetryCensus:
    """
    Exhaustive census over the reduced squares of order n.

    Args:
        n: Order
        workers: Worker processes for the autoparatopism verdicts
        max_n: Largest n the census accepts
        show_progress: Show a tqdm bar over batches of squares
        squares_max_n: Budget passed to enumerate_reduced
        autoparatopism_max_n: Budget passed to each autoparatopism search

    Raises:
        BudgetExceeded: n above any of the three budgets
    """
    check_budget("symmetry_census", n, max_n)
    verdicts = partial(_verdicts, max_n=autoparatopism_max_n)
    total = 0
    nontrivial = 0
    with WorkerPool(workers) as pool:
        for batch in progress(batched(enumerate_reduced(n, n, max_n=squares_max_n), VERDICT_BATCH), show_progress, f"n={n}"):
            total += len(batch)
            if pool.is_parallel:
                chunks = [batch[i::pool.workers] for i in range(pool.workers)]
                nontrivial += sum(pool.map(verdicts, chunks))
            else:
                nontrivial += verdicts(batch)
    census = SymmetryCensus(n, total, nontrivial)
    logger.info(f"n={n}: {nontrivial} of {total} reduced squares have a non-trivial autoparatopism")
    return census


def bound_value(n: int) -> Fraction:
    """
    6 n!^3 n^ceil(5n^2/8) / ((n!)^(2n) n^(-n^2)), an upper bound on the
    proportion of squares with a non-trivial autoparatopism.
    """
    if n < 2:
        raise ValueError(f"bound_value needs n >= 2, got {n}")
    f = factorial(n)
    exponent = -(-5 * n * n // 8)
    return Fraction(6 * f ** 3 * n ** exponent * n ** (n * n), f ** (2 * n))


def class_count_estimates(n: int, latin_squares: Optional[int] = None) -> ClassEstimates:
    """
    L_n / n!, L_n / n!^3 and L_n / (6 n!^3).

    Args:
        n: Order
        latin_squares: L_n; the published value is used when omitted

    Raises:
        MissingConstant: L_n not supplied and not published
    """
    if latin_squares is None:
        constants = PublishedConstants()
        if not constants.has(n, n):
            raise MissingConstant(f"L_{n} is not published; pass it explicitly")
        latin_squares = constants.latin_squares(n)
    f = factorial(n)
    return ClassEstimates(
        Fraction(latin_squares, f),
        Fraction(latin_squares, f ** 3),
        Fraction(latin_squares, 6 * f ** 3),
    )


def random_paratopism(n: int, rng: random.Random) -> Paratopism:
    """Uniformly random paratopism of degree n."""
    maps = []
    for _ in range(3):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        maps.append(Permutation(tuple(images)))
    return Paratopism(rng.choice(CONJUGATES), *maps)


def spot_check_invariance(
    squares: List[LatinRectangle],
    samples: int,
    seed: int,
    max_n: int = AUTOPARATOPISM_MAX_N,
) -> int:
    """
    Compare each sampled square's verdict with the verdict for a random
    paratopic image (reduced). Returns the number of disagreements.
    """
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(samples):
        square = rng.choice(squares)
        image = reduce_rectangle(apply_paratopism(square, random_paratopism(square.n, rng)))
        if has_nontrivial_autoparatopism(square, max_n) != has_nontrivial_autoparatopism(image, max_n):
            mismatches += 1
    return mismatches


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"
