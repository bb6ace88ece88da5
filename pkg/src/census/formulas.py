"""
Class-summation formulas for reduced Latin rectangles and squares.

Both formulas sum over the isomorphism classes of k-regular balanced
bipartite graphs:

    R_{k,n} = 2n k! (n-k)! * sum m(B) / |Aut(B)|
    R_n     = 2n k! (n-k)! * sum m(B) m(B') / |Aut(B)|     (B' the complement)

Each term is accumulated as an integer multiple of 1 / (2 (n!)^2), which
|Aut(B)| always divides, and the final division is checked to be exact.
"""

from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

from ..exceptions import InexactSum, ShapeInvalid
from ..graphs.bipartite_graph import BipartiteGraph, complement
from ..graphs.factorization import FactorizationMemo, factorization_count, FACTORIZATION_MAX_N
from ..graphs.matchings import MATCHINGS_MAX_N
from ..utils.config_loader import get_budget_config, get_census_config
from ..utils.logger import setup_logger
from ..utils.parallel import WorkerPool, batched, progress
from .generator import GRAPHS_LOW_DEGREE_MAX_N, GRAPHS_MAX_N, GraphClass, enumerate_graphs

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ClassEvaluation:
    """m(B), and m of the complement when requested, for one graph class."""

    graph_class: GraphClass
    m: int
    m_complement: Optional[int] = None

    @property
    def orbit_size(self) -> int:
        """Number of labelled graphs in the class, 2 (n!)^2 / |Aut(B)|."""
        n = self.graph_class.graph.n
        size, remainder = divmod(2 * factorial(n) ** 2, self.graph_class.form.aut_order)
        if remainder:
            raise InexactSum(f"|Aut(B)| = {self.graph_class.form.aut_order} does not divide 2(n!)^2")
        return size


# Worker-process state: each process keeps its own memo seeded from the parent
_worker_memo: Optional[FactorizationMemo] = None
_worker_max_n: int = FACTORIZATION_MAX_N


def _init_worker(entries: Dict[bytes, int], max_n: int) -> None:
    global _worker_memo, _worker_max_n
    _worker_memo = FactorizationMemo(entries)
    _worker_max_n = max_n


def _evaluate_remote(task: Tuple[int, Tuple[int, ...], int, bool]) -> Tuple[int, Optional[int], Dict[bytes, int]]:
    n, rows, k, with_complement = task
    graph = BipartiteGraph(n, rows, k)
    m = factorization_count(graph, _worker_memo, max_n=_worker_max_n)
    m_bar = None
    if with_complement:
        m_bar = factorization_count(complement(graph), _worker_memo, max_n=_worker_max_n)
    return m, m_bar, _worker_memo.drain_fresh()


class CensusRunner:
    """Evaluates m(B) over graph classes and the summation formulas"""

    def __init__(
        self,
        workers: int = 1,
        memo: Optional[FactorizationMemo] = None,
        memo_path: Optional[str] = None,
        checkpoint_every: int = 500,
        show_progress: bool = False,
        budgets: Optional[Dict[str, int]] = None,
    ):
        """
        Initialize census runner.

        Args:
            workers: Worker processes (1 evaluates in-process on one shared memo)
            memo: Memo to use; loaded from memo_path when omitted
            memo_path: Cache file for loading and checkpointing the memo
            checkpoint_every: Save the memo after this many classes
            show_progress: Show tqdm progress bars
            budgets: Overrides for the graphs_*, factorization_max_n and
                matchings_max_n budgets
        """
        self.workers = max(1, int(workers))
        self.memo_path = memo_path
        self.checkpoint_every = max(1, int(checkpoint_every))
        self.show_progress = show_progress
        budgets = budgets or {}
        self.graphs_max_n = budgets.get('graphs_max_n', GRAPHS_MAX_N)
        self.graphs_low_degree_max_n = budgets.get('graphs_k2_max_n', GRAPHS_LOW_DEGREE_MAX_N)
        self.factorization_max_n = budgets.get('factorization_max_n', FACTORIZATION_MAX_N)
        self.matchings_max_n = budgets.get('matchings_max_n', MATCHINGS_MAX_N)

        if memo is not None:
            self.memo = memo
        elif memo_path:
            self.memo = FactorizationMemo.load(memo_path)
        else:
            self.memo = FactorizationMemo()

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides) -> "CensusRunner":
        """Build a runner from the census and budgets config sections."""
        census = get_census_config(config)
        options = {
            'workers': census.get('workers', 1),
            'memo_path': census.get('memo_cache'),
            'checkpoint_every': census.get('checkpoint_every', 500),
            'budgets': get_budget_config(config),
        }
        options.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**options)

    def classes(self, k: int, n: int) -> List[GraphClass]:
        return list(enumerate_graphs(k, n, self.graphs_max_n, self.graphs_low_degree_max_n))

    def checkpoint(self) -> None:
        if self.memo_path:
            self.memo.save(self.memo_path)

    def evaluate(self, k: int, n: int, with_complement: bool = False) -> List[ClassEvaluation]:
        """
        m(B) (and m of the complement) for every class of k-regular graphs.

        The memo is checkpointed every checkpoint_every classes and when the
        run is interrupted.
        """
        classes = self.classes(k, n)
        logger.info(f"Evaluating {len(classes)} graph classes for k={k} n={n} (workers={self.workers})")

        results: List[ClassEvaluation] = []
        initargs = (self.memo.snapshot(), self.factorization_max_n)
        try:
            with WorkerPool(self.workers, _init_worker, initargs) as pool:
                batches = batched(classes, self.checkpoint_every)
                total_batches = -(-len(classes) // self.checkpoint_every)
                for batch in progress(batches, self.show_progress, f"k={k} n={n}", total_batches):
                    if pool.is_parallel:
                        results.extend(self._evaluate_parallel(pool, batch, with_complement))
                    else:
                        results.extend(self._evaluate_local(cls, with_complement) for cls in batch)
                    self.checkpoint()
        except KeyboardInterrupt:
            logger.warning("Interrupted, saving memo checkpoint")
            self.checkpoint()
            raise
        return results

    def _evaluate_local(self, graph_class: GraphClass, with_complement: bool) -> ClassEvaluation:
        graph = graph_class.graph
        m = factorization_count(graph, self.memo, max_n=self.factorization_max_n)
        m_bar = None
        if with_complement:
            m_bar = factorization_count(complement(graph), self.memo, max_n=self.factorization_max_n)
        return ClassEvaluation(graph_class, m, m_bar)

    def _evaluate_parallel(self, pool: WorkerPool, batch: List[GraphClass], with_complement: bool) -> List[ClassEvaluation]:
        tasks = [(cls.graph.n, cls.graph.rows, cls.graph.k, with_complement) for cls in batch]
        evaluations = []
        for graph_class, (m, m_bar, fresh) in zip(batch, pool.map(_evaluate_remote, tasks)):
            self.memo.merge(fresh)
            evaluations.append(ClassEvaluation(graph_class, m, m_bar))
        return evaluations

    def reduced_rectangles(self, k: int, n: int) -> int:
        """R_{k,n} by summing m(B) / |Aut(B)| over k-regular classes."""
        if not 1 <= k <= n:
            raise ShapeInvalid(f"need 1 <= k <= n, got k={k} n={n}")
        total = sum(evaluation.m * evaluation.orbit_size for evaluation in self.evaluate(k, n))
        value = scale_class_sum(total, k, n)
        logger.info(f"R_({k},{n}) = {value}")
        return value

    def reduced_squares(self, n: int, k: Optional[int] = None) -> int:
        """R_n by summing m(B) m(B') / |Aut(B)| over k-regular classes; k defaults to n // 2."""
        if k is None:
            k = n // 2
        if not 0 <= k <= n:
            raise ShapeInvalid(f"need 0 <= k <= n, got k={k} n={n}")
        total = sum(
            evaluation.m * evaluation.m_complement * evaluation.orbit_size
            for evaluation in self.evaluate(k, n, with_complement=True)
        )
        value = scale_class_sum(total, k, n)
        logger.info(f"R_{n} = {value} (via k={k})")
        return value


def scale_class_sum(total: int, k: int, n: int) -> int:
    """
    Apply 2n k! (n-k)! / (2 (n!)^2) to an orbit-weighted class sum.

    Raises:
        InexactSum: the result is not an integer
    """
    numerator = 2 * n * factorial(k) * factorial(n - k) * total
    value, remainder = divmod(numerator, 2 * factorial(n) ** 2)
    if remainder:
        raise InexactSum(f"class sum for k={k} n={n} is not integral")
    return value


def reduced_rectangles(k: int, n: int, runner: Optional[CensusRunner] = None) -> int:
    return (runner or CensusRunner()).reduced_rectangles(k, n)


def reduced_squares(n: int, k: Optional[int] = None, runner: Optional[CensusRunner] = None) -> int:
    return (runner or CensusRunner()).reduced_squares(n, k)
