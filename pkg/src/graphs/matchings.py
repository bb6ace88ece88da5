"""Perfect matchings (1-factors) of balanced bipartite graphs"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..exceptions import FactorNotInGraph, NotAnEdge, check_budget
from .bipartite_graph import BipartiteGraph, Edge

MATCHINGS_MAX_N = 16


@dataclass(frozen=True)
class OneFactor:
    """Perfect matching: matching[i] is the symbol-vertex paired with c_i (0-based)."""

    matching: Tuple[int, ...]

    def edges(self) -> Iterator[Edge]:
        return iter(enumerate(self.matching))

    def as_graph(self) -> BipartiteGraph:
        return BipartiteGraph(len(self.matching), tuple(1 << j for j in self.matching), 1)


def count_perfect_matchings(graph: BipartiteGraph, max_n: int = MATCHINGS_MAX_N) -> int:
    """
    Number of perfect matchings (the permanent of the biadjacency matrix).

    Dynamic programme over subsets of used symbol-vertices; rows are matched
    in order so the subset size identifies the next row.
    """
    check_budget("count_perfect_matchings", graph.n, max_n)
    n = graph.n
    ways = [0] * (1 << n)
    ways[0] = 1
    for used in range(1 << n):
        current = ways[used]
        if not current:
            continue
        i = used.bit_count()
        if i == n:
            continue
        options = graph.rows[i] & ~used
        while options:
            bit = options & -options
            options ^= bit
            ways[used | bit] += current
    return ways[-1]


def one_factors_through(graph: BipartiteGraph, edge: Edge) -> Iterator[OneFactor]:
    """
    Yield every perfect matching that contains edge, each exactly once.

    The next column-vertex to match is always one with the fewest free
    neighbours, and a vertex with none ends the branch.

    Raises:
        NotAnEdge: edge is not in the graph
    """
    first, partner = edge
    if not graph.has_edge(first, partner):
        raise NotAnEdge(f"({first}, {partner}) is not an edge")

    n = graph.n
    rows = graph.rows
    matching: List[int] = [-1] * n
    matching[first] = partner

    def extend(pending: List[int], used: int) -> Iterator[OneFactor]:
        if not pending:
            yield OneFactor(tuple(matching))
            return
        choice, choice_options, fewest = -1, 0, n + 1
        for i in pending:
            options = rows[i] & ~used
            count = options.bit_count()
            if count < fewest:
                choice, choice_options, fewest = i, options, count
                if count <= 1:
                    break
        if not choice_options:
            return
        rest = [i for i in pending if i != choice]
        options = choice_options
        while options:
            bit = options & -options
            options ^= bit
            matching[choice] = bit.bit_length() - 1
            yield from extend(rest, used | bit)
        matching[choice] = -1

    yield from extend([i for i in range(n) if i != first], 1 << partner)


def remove_factor(graph: BipartiteGraph, factor: OneFactor) -> BipartiteGraph:
    """
    B - F, a (k-1)-regular graph when B is k-regular.

    Raises:
        FactorNotInGraph: some matching edge is missing from the graph
    """
    if len(factor.matching) != graph.n:
        raise FactorNotInGraph(f"factor has {len(factor.matching)} edges, graph order is {graph.n}")
    rows = list(graph.rows)
    for i, j in factor.edges():
        if not graph.has_edge(i, j):
            raise FactorNotInGraph(f"matching edge ({i}, {j}) is not in the graph")
        rows[i] &= ~(1 << j)
    k = None if graph.k is None else graph.k - 1
    return BipartiteGraph(graph.n, tuple(rows), k)
