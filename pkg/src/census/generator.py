"""Orderly generation of k-regular balanced bipartite graphs up to isomorphism"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List

from ..exceptions import ShapeInvalid, check_budget
from ..graphs.bipartite_graph import BipartiteGraph, complement
from ..graphs.canonical import (
    CanonicalForm,
    canonical_form,
    code_to_rows,
    is_lexmin,
    lexmin_code,
    transpose_code,
)
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

GRAPHS_MAX_N = 8
GRAPHS_LOW_DEGREE_MAX_N = 11


@dataclass(frozen=True)
class GraphClass:
    """One isomorphism class: canonical representative plus its canonical form."""

    graph: BipartiteGraph
    form: CanonicalForm

    @classmethod
    def of(cls, graph: BipartiteGraph) -> "GraphClass":
        form = canonical_form(graph)
        return cls(form.to_graph(), form)


def enumerate_graphs(
    k: int,
    n: int,
    max_n: int = GRAPHS_MAX_N,
    low_degree_max_n: int = GRAPHS_LOW_DEGREE_MAX_N,
) -> Iterator[GraphClass]:
    """
    Yield one canonical representative per isomorphism class of k-regular
    balanced bipartite graphs on 2n vertices (side swap included).

    Classes with k or n - k at most 2 have their own, larger budget.
    For 2k > n the classes are the complements of the (n-k)-regular ones.

    Raises:
        ShapeInvalid: k outside 0..n
        BudgetExceeded: n above the applicable budget
    """
    if not 0 <= k <= n:
        raise ShapeInvalid(f"need 0 <= k <= n, got k={k} n={n}")
    limit = low_degree_max_n if min(k, n - k) <= 2 else max_n
    check_budget("enumerate_graphs", n, limit)

    if k == 0:
        yield GraphClass.of(BipartiteGraph.empty(n))
        return
    if 2 * k > n:
        for cls in enumerate_graphs(n - k, n, max_n, low_degree_max_n):
            yield GraphClass.of(complement(cls.graph))
        return

    produced = 0
    for code in _orderly_codes(k, n):
        produced += 1
        yield GraphClass.of(BipartiteGraph(n, code_to_rows(code, n), k))
    logger.debug(f"Generated {produced} classes for k={k} n={n}")


def _orderly_codes(k: int, n: int) -> Iterator[tuple]:
    """
    Least biadjacency codes built row by row.

    Every prefix of a least code is itself least under row and column
    permutations, so any prefix failing that test is pruned. A complete
    code is kept only when it is not beaten by its transpose.
    """
    options = sorted(sum(1 << (n - 1 - p) for p in chosen) for chosen in combinations(range(n), k))
    rows: List[int] = []
    degrees = [0] * n

    def extend(start: int) -> Iterator[tuple]:
        depth = len(rows)
        if depth == n:
            code = tuple(rows)
            if code <= lexmin_code(transpose_code(code, n), n)[0]:
                yield code
            return
        remaining = n - depth - 1
        for index in range(start, len(options)):
            row = options[index]
            feasible = True
            for p in range(n):
                filled = degrees[p] + (row >> (n - 1 - p) & 1)
                if filled > k or k - filled > remaining:
                    feasible = False
                    break
            if not feasible:
                continue
            rows.append(row)
            if _columns_ascending(rows, n) and is_lexmin(rows, n):
                for p in range(n):
                    degrees[p] += row >> (n - 1 - p) & 1
                yield from extend(index)
                for p in range(n):
                    degrees[p] -= row >> (n - 1 - p) & 1
            rows.pop()

    yield from extend(0)


def _columns_ascending(rows: List[int], n: int) -> bool:
    # columns read top to bottom, row 0 most significant
    columns = transpose_code(rows, n)
    return all(columns[p] <= columns[p + 1] for p in range(n - 1))
