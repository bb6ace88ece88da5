"""Extremal m(B) census over k-regular graph classes"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..exceptions import ShapeInvalid
from ..graphs.matchings import MATCHINGS_MAX_N, count_perfect_matchings
from ..utils.logger import log_census_result, setup_logger
from .formulas import CensusRunner, ClassEvaluation, scale_class_sum

logger = setup_logger(__name__)


@dataclass(frozen=True)
class CensusResult:
    """Per-(n, k) census: class count, R_{k,n} and the extremes of m(B)"""

    n: int
    k: int
    reduced_count: int
    class_count: int
    min_m: int
    min_count: int
    max_m: int
    max_count: int
    min_witnesses: Tuple[bytes, ...] = field(default=())
    max_witnesses: Tuple[bytes, ...] = field(default=())
    # Perfect-matching counts of the maximisers, and the largest count overall
    max_m_matchings: Tuple[int, ...] = field(default=())
    max_matchings: int = 0

    @property
    def max_unique(self) -> bool:
        return self.max_count == 1

    @property
    def max_m_has_most_matchings(self) -> bool:
        """Whether a maximiser of m(B) also maximises the number of perfect matchings."""
        return self.max_matchings in self.max_m_matchings

    def to_line(self) -> str:
        return (
            f"CENSUS {self.n} {self.k} {self.reduced_count} {self.class_count} "
            f"{self.min_m} {self.min_count} {self.max_m}"
        )

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'reduced_count': self.reduced_count,
            'class_count': self.class_count,
            'min_m': self.min_m,
            'min_count': self.min_count,
            'max_m': self.max_m,
            'max_count': self.max_count,
            'max_unique': self.max_unique,
            'min_witnesses': [key.hex() for key in self.min_witnesses],
            'max_witnesses': [key.hex() for key in self.max_witnesses],
            'max_m_matchings': list(self.max_m_matchings),
            'max_matchings': self.max_matchings,
        }


def extremal_m(k: int, n: int, runner: Optional[CensusRunner] = None) -> CensusResult:
    """
    Census of m(B) over all classes of k-regular balanced bipartite graphs.

    Args:
        k: Degree, 2 <= k <= n - 2
        n: Order of each side
        runner: Census runner (workers, memo); a default one when omitted

    Returns:
        CensusResult with R_{k,n} computed from the same class sum
    """
    if not 2 <= k <= n - 2:
        raise ShapeInvalid(f"extremal census needs 2 <= k <= n-2, got k={k} n={n}")
    runner = runner or CensusRunner()
    evaluations = runner.evaluate(k, n)
    result = summarize(k, n, evaluations, runner.matchings_max_n)
    log_census_result(logger, result)
    return result


def summarize(
    k: int,
    n: int,
    evaluations: List[ClassEvaluation],
    matchings_max_n: int = MATCHINGS_MAX_N,
) -> CensusResult:
    values = [evaluation.m for evaluation in evaluations]
    min_m, max_m = min(values), max(values)
    minimisers = [e for e in evaluations if e.m == min_m]
    maximisers = [e for e in evaluations if e.m == max_m]

    matchings = [count_perfect_matchings(e.graph_class.graph, matchings_max_n) for e in evaluations]
    maximiser_matchings = tuple(
        count for e, count in zip(evaluations, matchings) if e.m == max_m
    )

    total = sum(e.m * e.orbit_size for e in evaluations)
    return CensusResult(
        n=n,
        k=k,
        reduced_count=scale_class_sum(total, k, n),
        class_count=len(evaluations),
        min_m=min_m,
        min_count=len(minimisers),
        max_m=max_m,
        max_count=len(maximisers),
        min_witnesses=tuple(e.graph_class.form.key for e in minimisers),
        max_witnesses=tuple(e.graph_class.form.key for e in maximisers),
        max_m_matchings=maximiser_matchings,
        max_matchings=max(matchings),
    )
